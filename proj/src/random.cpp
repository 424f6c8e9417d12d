#include "qfocus/random.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qfocus {

State random_state(std::size_t n, Rng& rng, std::size_t q) {
  std::normal_distribution<double> gauss;
  State s = State::zero(n, q);
  for (Complex& a : s.amplitudes()) a = Complex(gauss(rng), gauss(rng));
  s *= Complex(1.0 / s.norm());
  return s;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> gauss;
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
  }
  return m;
}

Matrix random_unitary(std::size_t dim, Rng& rng) {
  const Matrix z = random_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix column phases so the distribution is Haar
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Gate random_unitary_gate(std::size_t wires, Rng& rng, std::size_t q) {
  return Gate(wires, wires, random_unitary(dimension(wires, q), rng), q);
}

Lens random_lens(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<std::size_t> wires(n);
  std::iota(wires.begin(), wires.end(), std::size_t{0});
  std::shuffle(wires.begin(), wires.end(), rng);
  wires.resize(std::min(m, n));
  return Lens(n, std::move(wires));
}

}  // namespace qfocus
