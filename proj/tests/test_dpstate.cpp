#include <catch_amalgamated.hpp>

#include <cmath>

#include "qfocus/dpstate.hpp"
#include "qfocus/random.hpp"
#include "support.hpp"

using namespace qfocus;
using support::code_of;

TEST_CASE("encoding is big-endian mixed radix", "[dpstate]") {
  CHECK(encode(Tuple{1, 0}, 2) == 2);
  CHECK(encode(Tuple{0, 1}, 2) == 1);
  CHECK(encode(Tuple{2, 1, 0}, 3) == 21);
  CHECK(encode(Tuple{}, 2) == 0);
  for (std::size_t i = 0; i < 81; ++i) CHECK(encode(decode(i, 4, 3), 3) == i);
  CHECK(decode(5, 3, 2) == Tuple{1, 0, 1});
}

TEST_CASE("size guard", "[dpstate]") {
  CHECK(dimension(30, 2) == (std::size_t{1} << 30));
  CHECK(code_of([] { dimension(31, 2); }) == ErrorCode::SizeGuardExceeded);
  CHECK(code_of([] { dimension(19, 3); }) == ErrorCode::SizeGuardExceeded);
  CHECK(dimension(0, 5) == 1);
  CHECK(code_of([] { State::zero(5, 2, 16); }) == ErrorCode::SizeGuardExceeded);
}

TEST_CASE("kets are normalized basis vectors", "[dpstate]") {
  const State k = ket({1, 0});
  CHECK(k.wires() == 2);
  CHECK(k[2] == Complex{1.0});
  CHECK(k.norm() == 1.0);
  CHECK(k.at(Tuple{1, 0}) == Complex{1.0});
  CHECK(k.at(Tuple{0, 1}) == Complex{0.0});
  CHECK(code_of([] { ket({2}); }) == ErrorCode::IndexOutOfRange);
  CHECK(ket({2, 1}, 3)[7] == Complex{1.0});
  CHECK(ket({}).size() == 1);
}

TEST_CASE("inner products and norms", "[dpstate]") {
  const double r = 1.0 / std::sqrt(2.0);
  const State plus(1, 2, {Complex{r}, Complex{r}});
  CHECK(std::abs(inner_product(plus, plus) - Complex{1.0}) < 1e-15);
  CHECK(std::abs(inner_product(plus, ket({0})) - Complex{r}) < 1e-15);
  CHECK(inner_product(ket({0, 1}), ket({1, 0})) == Complex{0.0});
  // antilinear in the first slot
  const State i_plus = Complex{0.0, 1.0} * plus;
  CHECK(std::abs(inner_product(i_plus, plus) - Complex{0.0, -1.0}) < 1e-15);
  CHECK(plus.unit_deviation() < 1e-15);
  CHECK(code_of([&] { inner_product(plus, ket({0, 0})); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("vector space operations", "[dpstate]") {
  Rng rng(3);
  const State a = random_state(3, rng);
  const State b = random_state(3, rng);
  CHECK(max_abs_diff(a + b - b, a) < 1e-15);
  CHECK(max_abs_diff(Complex{2.0} * a, a + a) == 0.0);
  CHECK(approx_equal(a - a, State::zero(3)));
  CHECK_FALSE(approx_equal(a, b));
  CHECK(code_of([&] { State(2, 2, std::vector<Complex>(3)); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("decompose reproduces the state from kets", "[dpstate]") {
  Rng rng(11);
  const State s = random_state(3, rng, 3);
  const auto parts = decompose(s);
  REQUIRE(parts.size() == 27);
  State sum = State::zero(3, 3);
  for (const auto& [v, c] : parts) sum += c * ket(v, 3);
  CHECK(max_abs_diff(sum, s) == 0.0);
  CHECK(parts[5].first == Tuple{0, 1, 2});
}

TEST_CASE("dpmap acts blockwise", "[dpstate]") {
  BlockTable t(1, 2, 2, {Complex{1}, Complex{2}, Complex{3}, Complex{4}});
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const BlockTable out = dpmap(swap, t);
  CHECK(out.block(0)[0] == Complex{2});
  CHECK(out.block(0)[1] == Complex{1});
  CHECK(out.block(1)[0] == Complex{4});
  CHECK(out.block(1)[1] == Complex{3});
  // dpmap respects composition
  Rng rng(5);
  const Matrix a = random_matrix(2, 2, rng);
  const Matrix b = random_matrix(2, 2, rng);
  CHECK(max_abs_diff(dpmap(a, dpmap(b, t)), dpmap(a * b, t)) < 1e-13);
  Matrix bad = Matrix::Identity(3, 3);
  CHECK(code_of([&] { dpmap(bad, t); }) == ErrorCode::ShapeMismatch);
}
