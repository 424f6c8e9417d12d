#include "qfocus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "qfocus/circuits.hpp"
#include "qfocus/fendo.hpp"
#include "qfocus/oracle.hpp"
#include "qfocus/random.hpp"

namespace qfocus {

namespace {

// Every injection of some m <= n wires into n, each in every order.
std::vector<Lens> all_lenses(std::size_t n) {
  std::vector<Lens> out;
  std::vector<std::size_t> idx;
  std::vector<bool> used(n, false);
  std::function<void()> grow = [&] {
    out.emplace_back(n, idx);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      idx.push_back(i);
      grow();
      idx.pop_back();
      used[i] = false;
    }
  };
  grow();
  return out;
}

std::vector<Tuple> all_tuples(std::size_t n) {
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < dimension(n, 2); ++i) out.push_back(decode(i, n, 2));
  return out;
}

void record(LawResult& r, bool ok) {
  ++r.cases;
  if (!ok) ++r.failures;
}

void record(LawResult& r, double deviation) {
  ++r.cases;
  r.max_deviation = std::max(r.max_deviation, deviation);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

bool all_passed(const std::vector<LawResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed(); });
}

std::vector<LawResult> check_lens_laws(std::size_t max_wires) {
  LawResult merge_extract{"merge_extract"};
  LawResult extract_merge{"extract_merge"};
  LawResult extractC_merge{"extractC_merge"};
  LawResult tnth_merge{"tnth_merge"};
  LawResult tnth_mergeC{"tnth_mergeC"};
  LawResult tnth_extract{"tnth_extract"};
  LawResult tnth_lens_index{"tnth_lens_index"};
  LawResult mem_lensC{"mem_lensC"};
  LawResult mem_lens_comp{"mem_lens_comp"};
  LawResult basis_perm{"lens_basis_perm"};
  LawResult double_complement{"complement_involutive_on_sorted"};
  LawResult assoc{"lens_comp_assoc"};
  LawResult focus1_in{"focus1_in"};

  std::vector<std::vector<Lens>> lenses_by_codomain;
  for (std::size_t n = 0; n <= max_wires; ++n) lenses_by_codomain.push_back(all_lenses(n));

  for (std::size_t n = 0; n <= max_wires; ++n) {
    const auto tuples = all_tuples(n);
    for (const Lens& l : lenses_by_codomain[n]) {
      const Lens c = l.complement();
      const std::size_t m = l.arity();

      for (const Tuple& t : tuples) {
        record(merge_extract, merge(l, extract(l, t), extract(c, t)) == t);
        const Tuple e = extract(l, t);
        bool ok = true;
        for (std::size_t j = 0; j < m; ++j) ok = ok && e[j] == t[l[j]];
        record(tnth_extract, ok);
        // classical focusing with a bit flip on every selected wire
        auto flip = [](Tuple v) {
          for (Symbol& s : v) s ^= 1U;
          return v;
        };
        record(focus1_in, extract(l, focus1(l, flip, t)) == flip(extract(l, t)));
      }

      for (const Tuple& v : all_tuples(m)) {
        for (const Tuple& w : all_tuples(n - m)) {
          const Tuple t = merge(l, v, w);
          record(extract_merge, extract(l, t) == v);
          record(extractC_merge, extract(c, t) == w);
          for (std::size_t i = 0; i < n; ++i) {
            if (l.contains(i)) {
              record(tnth_merge, t[i] == v[l.index_of(i)]);
            } else {
              record(tnth_mergeC, t[i] == w[c.index_of(i)]);
            }
          }
        }
      }

      for (std::size_t i = 0; i < n; ++i) {
        record(mem_lensC, c.contains(i) == !l.contains(i));
        if (l.contains(i)) record(tnth_lens_index, l[l.index_of(i)] == i);
      }

      const auto [basis, perm] = factor(l);
      const bool strictly_ascending = std::adjacent_find(basis.indices().begin(), basis.indices().end(),
                                                         std::greater_equal<>()) == basis.indices().end();
      const std::set<std::size_t> a(l.indices().begin(), l.indices().end());
      const std::set<std::size_t> b(basis.indices().begin(), basis.indices().end());
      record(basis_perm, compose(basis, perm) == l && strictly_ascending && a == b);
      if (l.is_sorted()) record(double_complement, c.complement() == basis);

      for (const Lens& inner : lenses_by_codomain[m]) {
        const Lens lc = compose(l, inner);
        for (std::size_t i : l.indices()) record(mem_lens_comp, lc.contains(i) == inner.contains(l.index_of(i)));
        if (n <= 4) {
          for (const Lens& innermost : lenses_by_codomain[inner.arity()]) {
            record(assoc, compose(compose(l, inner), innermost) == compose(l, compose(inner, innermost)));
          }
        }
      }
    }
  }
  return {merge_extract, extract_merge, extractC_merge, tnth_merge,       tnth_mergeC,
          tnth_extract,  tnth_lens_index, mem_lensC,    mem_lens_comp,    basis_perm,
          double_complement, assoc,        focus1_in};
}

std::vector<LawResult> check_focus_laws(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  LawResult curryK{"curryK", 0, 0, 0.0, 0.0};
  LawResult uncurryK{"uncurryK", 0, 0, 0.0, 0.0};
  LawResult fast_vs_ref{"focus_fast_vs_reference", 0, 0, 0.0, 1e-12};
  LawResult comp{"focus_comp", 0, 0, 0.0, 1e-10};
  LawResult focusM{"focusM", 0, 0, 0.0, 1e-10};
  LawResult focusC{"focusC", 0, 0, 0.0, 1e-10};
  LawResult unitary{"unitary_focus", 0, 0, 0.0, 1e-10};
  LawResult dpbasis{"focus_dpbasis", 0, 0, 0.0, 1e-12};
  LawResult dpmerge_basis{"dpmerge_dpbasis", 0, 0, 0.0, 0.0};
  LawResult natural{"naturality", 0, 0, 0.0, 1e-12};
  LawResult classical{"focus1_permutation_gate", 0, 0, 0.0, 0.0};

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t n = pick(rng, 1, cfg.max_wires);
    const std::size_t m = pick(rng, 0, std::min(n, cfg.max_gate_wires));
    const Lens l = random_lens(n, m, rng);
    const State s = random_state(n, rng);
    const State t = random_state(n, rng);
    const Gate f = random_unitary_gate(m, rng);
    const Gate g = random_unitary_gate(m, rng);

    const BlockTable curried = curry(l, s);
    record(curryK, uncurry(l, curried) == s);
    BlockTable table(m, 2, dimension(n - m, 2), std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()));
    record(uncurryK, curry(l, uncurry(l, table)) == table);

    const State fast = focus_apply(l, g, s, cfg.focus);
    record(fast_vs_ref, max_abs_diff(fast, focus_apply_reference(l, g, s)));
    record(comp, max_abs_diff(focus_apply(l, vcomp(f, g), s), focus_apply(l, f, focus_apply(l, g, s))));

    const std::size_t p = pick(rng, 0, m);
    const Lens inner = random_lens(m, p, rng);
    const Gate h = random_unitary_gate(p, rng);
    record(focusM, max_abs_diff(focus_apply(compose(l, inner), h, s), focus_apply(l, focus(inner, h), s)));

    const Lens rest = l.complement();
    const Lens other = compose(rest, random_lens(rest.arity(), pick(rng, 0, std::min(rest.arity(), cfg.max_gate_wires)), rng));
    const Gate k = random_unitary_gate(other.arity(), rng);
    record(focusC, max_abs_diff(focus_apply(l, f, focus_apply(other, k, s)), focus_apply(other, k, focus_apply(l, f, s))));

    record(unitary, std::abs(inner_product(focus_apply(l, g, s), focus_apply(l, g, t)) - inner_product(s, t)));

    const Tuple v = decode(pick(rng, 0, s.size() - 1), n, 2);
    record(dpbasis, max_abs_diff(focus_dpbasis_step(l, g, v), focus_apply(l, g, ket(v))));
    const Tuple u = decode(pick(rng, 0, dimension(m, 2) - 1), m, 2);
    record(dpmerge_basis, max_abs_diff(dpmerge(l, v, ket(u)), ket(merge(l, u, extract(rest, v)))));
  }

  // naturality: dpmap(phi) ∘ G = G ∘ dpmap(phi) on random block tables
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t m = pick(rng, 0, cfg.max_gate_wires);
    const std::size_t d_in = pick(rng, 1, 4);
    const std::size_t d_out = pick(rng, 1, 4);
    const Matrix raw = random_matrix(dimension(m, 2) * d_in, 1, rng);
    const BlockTable blocks(m, 2, d_in, std::vector<Complex>(raw.data(), raw.data() + raw.size()));
    const Matrix phi = random_matrix(d_out, d_in, rng);
    const Gate g = Gate(m, m, random_matrix(dimension(m, 2), dimension(m, 2), rng));
    record(natural, max_abs_diff(dpmap(phi, apply_module(g, blocks)), apply_module(g, dpmap(phi, blocks))));
  }

  // a classical permutation of I^m focused on a basis ket is classical focusing
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t n = pick(rng, 1, cfg.max_wires);
    const std::size_t m = pick(rng, 0, std::min(n, cfg.max_gate_wires));
    const Lens l = random_lens(n, m, rng);
    const std::size_t dim = dimension(m, 2);
    std::vector<std::size_t> image(dim);
    for (std::size_t i = 0; i < dim; ++i) image[i] = i;
    std::shuffle(image.begin(), image.end(), rng);
    Matrix pm = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) pm(static_cast<Eigen::Index>(image[j]), static_cast<Eigen::Index>(j)) = 1.0;
    const Gate perm(m, m, pm);
    auto f = [&](const Tuple& v) { return decode(image[encode(v, 2)], m, 2); };
    const Tuple t = decode(pick(rng, 0, dimension(n, 2) - 1), n, 2);
    record(classical, max_abs_diff(focus_apply(l, perm, ket(t)), ket(focus1(l, f, t))));
  }

  return {curryK, uncurryK, fast_vs_ref, comp, focusM, focusC, unitary, dpbasis, dpmerge_basis, natural, classical};
}

std::vector<LawResult> check_unitarity(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  LawResult builtins{"builtin_unitary", 0, 0, 0.0, 1e-12};
  for (const char* name : {"hadamard", "cnot", "toffoli", "swap", "identity(0)", "identity(1)", "identity(3)"}) {
    record(builtins, unitarity_deviation(builtin(name)));
  }
  LawResult random_gates{"random_unitary", 0, 0, 0.0, 1e-12};
  LawResult comp{"unitary_comp", 0, 0, 0.0, 1e-10};
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t m = pick(rng, 0, cfg.max_gate_wires);
    const Gate f = random_unitary_gate(m, rng);
    const Gate g = random_unitary_gate(m, rng);
    record(random_gates, std::max(unitarity_deviation(f), unitarity_deviation(g)));
    record(comp, unitarity_deviation(vcomp(f, g)));
  }
  LawResult h_from_ket_bra{"hadamard_ket_bra", 0, 0, 0.0, 0.0};
  Matrix display(2, 2);
  display << 1.0, 1.0, 1.0, -1.0;
  record(h_from_ket_bra, (hadamard().matrix() - Complex(kInvSqrt2) * display).cwiseAbs().maxCoeff());
  return {builtins, random_gates, comp, h_from_ket_bra};
}

std::vector<LawResult> check_oracle(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  LawResult random_case{"oracle_random_unitary", 0, 0, 0.0, 1e-10};
  LawResult constructions{"oracle_kron_vs_columns", 0, 0, 0.0, 1e-12};
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t n = pick(rng, 1, cfg.max_wires);
    const std::size_t m = pick(rng, 0, std::min(n, cfg.max_gate_wires));
    const Lens l = random_lens(n, m, rng);
    const Gate g = random_unitary_gate(m, rng);
    record(random_case, assert_equiv(l, g, 1, rng));
    const DenseOperator a = build_full_matrix(l, g);
    const DenseOperator b = build_full_matrix_by_columns(l, g);
    record(constructions, (a.mat - b.mat).cwiseAbs().maxCoeff());
  }
  LawResult builtin_case{"oracle_builtin_all_lenses", 0, 0, 0.0, 1e-12};
  for (const char* name : {"hadamard", "cnot", "toffoli", "swap"}) {
    const Gate g = builtin(name);
    for (std::size_t n = g.in_wires(); n <= std::min<std::size_t>(4, cfg.max_wires); ++n) {
      for (const Lens& l : all_lenses(n)) {
        if (l.arity() == g.in_wires()) record(builtin_case, assert_equiv(l, g, 2, rng));
      }
    }
  }
  return {random_case, constructions, builtin_case};
}

std::vector<LawResult> check_monoid(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  constexpr std::size_t n = 4;
  std::vector<FocEndo> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(FocEndo::make(Lens::single(n, i), hadamard()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pool.push_back(FocEndo::make(Lens::pair(n, i, j), cnot()));
  }

  LawResult commutative{"comp_fendo_commutative", 0, 0, 0.0, 1e-12};
  LawResult associative{"comp_fendo_associative", 0, 0, 0.0, 1e-12};
  LawResult unit{"comp_fendo_unit", 0, 0, 0.0, 0.0};
  LawResult absorbing{"comp_fendo_absorbing", 0, 0, 0.0, 0.0};
  constexpr double tol = 1e-12;
  const FocEndo id = FocEndo::unit(n);
  const FocEndo err = FocEndo::err(n);
  for (const FocEndo& a : pool) {
    record(unit, approx_equal(comp_fendo(id, a), a, 0.0) && approx_equal(comp_fendo(a, id), a, 0.0));
    record(absorbing, comp_fendo(err, a).is_err() && comp_fendo(a, err).is_err());
    for (const FocEndo& b : pool) {
      const FocEndo ab = comp_fendo(a, b);
      record(commutative, approx_equal(ab, comp_fendo(b, a), tol));
      for (const FocEndo& c : pool) {
        record(associative, approx_equal(comp_fendo(ab, c), comp_fendo(a, comp_fendo(b, c)), tol));
      }
    }
  }

  LawResult disjoint_family{"compn_mor_disjoint", 0, 0, 0.0, 1e-10};
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t wires = pick(rng, 1, cfg.max_wires);
    std::vector<std::size_t> order(wires);
    for (std::size_t i = 0; i < wires; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<FocEndo> family;
    for (std::size_t at = 0; at < wires;) {
      const std::size_t size = std::min(pick(rng, 1, cfg.max_gate_wires), wires - at);
      const Lens l(wires, std::vector<std::size_t>(order.begin() + static_cast<std::ptrdiff_t>(at),
                                                   order.begin() + static_cast<std::ptrdiff_t>(at + size)));
      family.push_back(FocEndo::make(l, random_unitary_gate(size, rng)));
      at += size;
    }
    std::vector<bool> chosen(family.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = pick(rng, 0, 3) != 0;
    const IndexPredicate pred = [&](std::size_t i) { return chosen[i]; };
    std::vector<Action> actions;
    for (const FocEndo& f : family) actions.push_back(fendo_mor(f, cfg.focus));
    const State s = random_state(wires, rng);
    const State sequential = compn_mor(actions, pred)(s);
    const State parallel = compn_fendo(family, wires, pred).apply(s, cfg.focus);
    record(disjoint_family, max_abs_diff(sequential, parallel));
  }
  return {commutative, associative, unit, absorbing, disjoint_family};
}

std::vector<LawResult> check_examples(const SuiteConfig& cfg) {
  Rng rng(cfg.seed);
  const ShorComponents sc = shor_components();

  LawResult bit_flip{"bit_flip_enc_ok", 0, 0, 0.0, 1e-12};
  for (const Tuple& t : all_tuples(3)) {
    const Tuple expect{t[0], t[0] ^ t[1], t[0] ^ t[2]};
    record(bit_flip, max_abs_diff(run_circuit(sc.bit_flip_enc, ket(t), cfg.focus), ket(expect)));
  }

  Circuit toffoli_120(3);
  toffoli_120.add({1, 2, 0}, "toffoli");
  LawResult bit_flip_toffoli{"bit_flip_toffoli", 0, 0, 0.0, 1e-10};
  const Circuit bf = vcomp(sc.bit_flip_dec, sc.bit_flip_enc);
  for (const Tuple& t : all_tuples(3)) {
    record(bit_flip_toffoli, max_abs_diff(run_circuit(bf, ket(t)), run_circuit(toffoli_120, ket(t))));
  }
  LawResult sign_flip_toffoli{"sign_flip_toffoli", 0, 0, 0.0, 1e-9};
  LawResult hadamardK{"hadamardK", 0, 0, 0.0, 1e-10};
  const Circuit sf = vcomp(sc.sign_flip_dec, sc.sign_flip_enc);
  const Circuit hh = vcomp(sc.hadamard3, sc.hadamard3);
  for (std::size_t trial = 0; trial < std::max<std::size_t>(cfg.trials / 4, 1); ++trial) {
    const State s = random_state(3, rng);
    record(sign_flip_toffoli, max_abs_diff(run_circuit(sf, s), run_circuit(toffoli_120, s)));
    record(hadamardK, max_abs_diff(run_circuit(hh, s), s));
  }

  LawResult shor{"shor_code_id", 0, 0, 0.0, 1e-9};
  const Circuit round_trip = vcomp(sc.shor_dec, sc.shor_enc);
  for (Symbol i : {0U, 1U}) {
    Tuple t(9, 0);
    t[0] = i;
    record(shor, max_abs_diff(run_circuit(round_trip, ket(t), cfg.focus), ket(t)));
  }

  LawResult ghz_ok{"ghz_ok", 0, 0, 0.0, 1e-9};
  for (std::size_t depth = 0; depth < 16; ++depth) {
    const std::size_t wires = depth + 1;
    State expect = State::zero(wires);
    expect[0] = kInvSqrt2;
    expect[expect.size() - 1] = kInvSqrt2;
    record(ghz_ok, max_abs_diff(run_circuit(ghz(depth), ket(Tuple(wires, 0)), cfg.focus), expect));
  }

  LawResult reversal{"rev_circuit_basis", 0, 0, 0.0, 1e-9};
  for (std::size_t wires = 0; wires <= 8; ++wires) {
    const Circuit rc = rev_circuit(wires);
    for (const Tuple& t : all_tuples(wires)) {
      const Tuple r(t.rbegin(), t.rend());
      record(reversal, max_abs_diff(run_circuit(rc, ket(t), cfg.focus), ket(r)));
    }
  }
  LawResult marginal{"rev_circuit_ok", 0, 0, 0.0, 1e-10};
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::size_t wires = pick(rng, 1, cfg.max_wires);
    const State s = random_state(wires, rng);
    const State r = run_circuit(rev_circuit(wires), s, cfg.focus);
    for (std::size_t i = 0; i < wires; ++i) {
      const auto lhs = proj(Lens::single(wires, wires - i - 1), r);
      const auto rhs = proj(Lens::single(wires, i), s);
      double dev = 0.0;
      for (std::size_t a = 0; a < lhs.size(); ++a) dev = std::max(dev, std::abs(lhs[a] - rhs[a]));
      record(marginal, dev);
    }
  }
  return {bit_flip, bit_flip_toffoli, sign_flip_toffoli, hadamardK, shor, ghz_ok, reversal, marginal};
}

}  // namespace qfocus
