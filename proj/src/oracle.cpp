#include "qfocus/oracle.hpp"

#include <algorithm>
#include <string>

namespace qfocus {

State DenseOperator::apply(const State& s) const {
  if (s.wires() != wires || s.alphabet() != q) throw Error(ErrorCode::ShapeMismatch, "dense operator arity mismatch");
  Eigen::Map<const Eigen::VectorXcd> in(s.amplitudes().data(), static_cast<Eigen::Index>(s.size()));
  Eigen::VectorXcd out = mat * in;
  return State(wires, q, std::vector<Complex>(out.data(), out.data() + out.size()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseOperator perm_matrix(std::size_t n, std::span<const std::size_t> pi, std::size_t q, std::size_t max_wires) {
  if (pi.size() != n) throw Error(ErrorCode::InvalidPermutation, "permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (std::size_t p : pi) {
    if (p >= n || hit[p]) throw Error(ErrorCode::InvalidPermutation, "not a bijection on " + std::to_string(n) + " wires");
    hit[p] = true;
  }
  const std::size_t dim = dimension(n, q, std::size_t{1} << max_wires);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const Tuple i = decode(col, n, q);
    Tuple j(n);
    for (std::size_t k = 0; k < n; ++k) j[pi[k]] = i[k];
    m(static_cast<Eigen::Index>(encode(j, q)), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return {n, q, std::move(m)};
}

DenseOperator build_full_matrix(const Lens& l, const Gate& g, std::size_t max_wires) {
  if (!g.is_square() || g.in_wires() != l.arity()) throw Error(ErrorCode::ShapeMismatch, "gate arity does not match lens");
  const std::size_t n = l.codomain();
  const std::size_t q = g.alphabet();
  dimension(n, q, std::size_t{1} << max_wires);

  const Lens c = l.complement();
  std::vector<std::size_t> pi(n);
  for (std::size_t k = 0; k < l.arity(); ++k) pi[l[k]] = k;
  for (std::size_t j = 0; j < c.arity(); ++j) pi[c[j]] = l.arity() + j;
  std::vector<std::size_t> inverse(n);
  for (std::size_t k = 0; k < n; ++k) inverse[pi[k]] = k;

  const auto pad = static_cast<Eigen::Index>(dimension(n - l.arity(), q));
  const Matrix padded = kron(g.matrix(), Matrix::Identity(pad, pad));
  const DenseOperator route = perm_matrix(n, pi, q, max_wires);
  const DenseOperator back = perm_matrix(n, inverse, q, max_wires);
  return {n, q, back.mat * padded * route.mat};
}

DenseOperator build_full_matrix_by_columns(const Lens& l, const Gate& g, std::size_t max_wires) {
  Gate full = focus(l, g, max_wires);
  return {l.codomain(), g.alphabet(), full.matrix()};
}

double assert_equiv(const Lens& l, const Gate& g, std::size_t trials, Rng& rng, std::size_t max_wires) {
  const DenseOperator dense = build_full_matrix(l, g, max_wires);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const State s = random_state(l.codomain(), rng, g.alphabet());
    worst = std::max(worst, max_abs_diff(dense.apply(s), focus_apply(l, g, s)));
  }
  return worst;
}

}  // namespace qfocus
