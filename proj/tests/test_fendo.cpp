#include <catch_amalgamated.hpp>

#include "naive.hpp"
#include "qfocus/fendo.hpp"
#include "qfocus/random.hpp"
#include "support.hpp"

using namespace qfocus;
using support::code_of;

namespace {

// {H on each wire} ∪ {CNOT on each sorted pair} at n = 4
std::vector<FocEndo> pool() {
  std::vector<FocEndo> out;
  for (std::size_t i = 0; i < 4; ++i) out.push_back(FocEndo::make(Lens::single(4, i), hadamard()));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) out.push_back(FocEndo::make(Lens(4, {i, j}), cnot()));
  return out;
}

}  // namespace

TEST_CASE("make keeps sorted lenses and folds permutations into the gate", "[fendo]") {
  const FocEndo sorted = FocEndo::make(Lens(3, {0, 1}), cnot());
  CHECK(sorted.support() == Lens(3, {0, 1}));
  CHECK(max_abs_diff(sorted.gate(), cnot()) == 0.0);
  CHECK(sorted.apply(ket({1, 0, 1})) == ket({1, 1, 1}));

  const FocEndo f = FocEndo::make(Lens(3, {2, 0}), cnot());
  CHECK(f.support() == Lens(3, {0, 2}));
  // wire 2 controls wire 0: the stored gate is cnot with roles exchanged
  CHECK(f.gate().apply(ket({0, 1})) == ket({1, 1}));
  CHECK(f.gate().apply(ket({1, 0})) == ket({1, 0}));
  for (std::size_t v = 0; v < 8; ++v) {
    const State k = ket(decode(v, 3, 2));
    CHECK(max_abs_diff(f.apply(k), focus_apply(Lens(3, {2, 0}), cnot(), k)) <= 1e-12);
  }
  CHECK(code_of([] { FocEndo::make(Lens(3, {0}), cnot()); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("unit and error elements", "[fendo]") {
  Rng rng(43);
  const State s = random_state(3, rng);
  const FocEndo u = FocEndo::unit(3);
  CHECK(u.support_size() == 0);
  CHECK_FALSE(u.is_err());
  CHECK(u.apply(s) == s);
  CHECK(approx_equal(FocEndo::make(Lens::empty(3), identity_gate(0)), u, 0.0));

  const FocEndo e = FocEndo::err(3);
  CHECK(e.is_err());
  CHECK(e.support() == Lens::identity(3));
  CHECK(e.apply(s) == State::zero(3));
  CHECK(e.gate().matrix().cwiseAbs().maxCoeff() == 0.0);
  CHECK(e.gate().matrix().rows() == 8);
}

TEST_CASE("parallel composition", "[fendo]") {
  const FocEndo a = FocEndo::make(Lens(3, {0, 1}), cnot());
  const FocEndo b = FocEndo::make(Lens(3, {2}), hadamard());
  const FocEndo ab = comp_fendo(a, b);
  CHECK(ab.support() == Lens::identity(3));
  Rng rng(47);
  const State s = random_state(3, rng);
  CHECK(max_abs_diff(ab.apply(s), b.apply(a.apply(s))) <= 1e-12);

  CHECK(comp_fendo(FocEndo::make(Lens(3, {0, 2}), cnot()), b).is_err());
  CHECK(comp_fendo(FocEndo::err(3), b).is_err());
  CHECK(comp_fendo(b, FocEndo::err(3)).is_err());
  CHECK(approx_equal(comp_fendo(FocEndo::unit(3), a), a, 0.0));
  CHECK(code_of([&] { comp_fendo(a, FocEndo::unit(4)); }) == ErrorCode::ShapeMismatch);

  // par_comp acts on the left wires with f and the right wires with g
  const Gate p = par_comp(hadamard(), cnot());
  const auto got = support::amps(p.apply(ket({0, 1, 0})));
  // |0,1,0> -> (|0> + |1>)/sqrt2 ⊗ |1,1>
  CHECK(got[3] == Complex{kInvSqrt2});
  CHECK(got[7] == Complex{kInvSqrt2});
  CHECK(std::abs(got[2]) == 0.0);
  CHECK(std::abs(got[6]) == 0.0);
  const auto flipped = support::amps(p.apply(ket({0, 1, 1})));
  CHECK(flipped[3] == Complex{0.0});
  CHECK(flipped[2] == Complex{kInvSqrt2});
  CHECK(flipped[6] == Complex{kInvSqrt2});
}

TEST_CASE("commutative monoid laws over the H/CNOT pool", "[fendo][laws]") {
  const auto p = pool();
  for (const auto& x : p)
    for (const auto& y : p) CHECK(approx_equal(comp_fendo(x, y), comp_fendo(y, x), 1e-12));
  for (const auto& x : p)
    for (const auto& y : p)
      for (const auto& z : p)
        CHECK(approx_equal(comp_fendo(comp_fendo(x, y), z), comp_fendo(x, comp_fendo(y, z)), 1e-12));
}

TEST_CASE("big operators over families", "[fendo]") {
  const std::vector<FocEndo> none;
  CHECK(approx_equal(compn_fendo(none, 4), FocEndo::unit(4), 0.0));

  const std::vector<FocEndo> fam{FocEndo::make(Lens(5, {3}), hadamard()), FocEndo::make(Lens(5, {4, 0}), cnot()),
                                 FocEndo::make(Lens(5, {1}), hadamard())};
  const FocEndo all = compn_fendo(fam, 5);
  CHECK(all.support() == Lens(5, {0, 1, 3, 4}));
  const FocEndo odd = compn_fendo(fam, 5, [](std::size_t i) { return i % 2 == 1; });
  CHECK(odd.support() == Lens(5, {0, 4}));

  auto overlapping = fam;
  overlapping.push_back(FocEndo::make(Lens(5, {2, 3}), cnot()));
  CHECK(compn_fendo(overlapping, 5).is_err());

  // sequential and parallel folds agree on a disjoint family
  std::vector<Action> acts;
  for (const auto& f : fam) acts.push_back(fendo_mor(f));
  Rng rng(53);
  const State s = random_state(5, rng);
  CHECK(max_abs_diff(compn_mor(acts)(s), all.apply(s)) <= 1e-10);
}

TEST_CASE("compn_mor applies the highest index first", "[fendo]") {
  // two hadamards on the same wire compose to the identity sequentially
  const FocEndo h = FocEndo::make(Lens(2, {1}), hadamard());
  const std::vector<Action> twice{fendo_mor(h), fendo_mor(h)};
  Rng rng(59);
  const State s = random_state(2, rng);
  CHECK(max_abs_diff(compn_mor(twice)(s), s) <= 1e-15);

  const std::vector<Action> seq{fendo_mor(FocEndo::make(Lens(2, {0, 1}), cnot())),
                                fendo_mor(FocEndo::make(Lens(2, {0}), hadamard()))};
  // H on wire 0 runs first, then cnot: the Bell state
  const State bell = compn_mor(seq)(ket({0, 0}));
  CHECK(bell[0] == Complex{kInvSqrt2});
  CHECK(bell[3] == Complex{kInvSqrt2});
  CHECK(compn_mor(seq, [](std::size_t i) { return i == 0; })(ket({1, 0})) == ket({1, 1}));
}

TEST_CASE("random disjoint families fold identically", "[fendo][laws]") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 5);
    const Lens order = random_lens(n, n, rng);
    std::vector<FocEndo> fam;
    std::size_t at = 0;
    while (at < n) {
      const std::size_t k = std::min<std::size_t>(1 + rng() % 3, n - at);
      std::vector<std::size_t> wires(order.indices().begin() + static_cast<std::ptrdiff_t>(at),
                                     order.indices().begin() + static_cast<std::ptrdiff_t>(at + k));
      fam.push_back(FocEndo::make(Lens(n, wires), random_unitary_gate(k, rng)));
      at += k;
    }
    std::vector<Action> acts;
    for (const auto& f : fam) acts.push_back(fendo_mor(f));
    const State s = random_state(n, rng);
    CHECK(max_abs_diff(compn_mor(acts)(s), compn_fendo(fam, n).apply(s)) <= 1e-10);
  }
}
