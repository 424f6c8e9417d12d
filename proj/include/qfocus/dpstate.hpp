#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qfocus/lens.hpp"

namespace qfocus {

using Complex = std::complex<double>;
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr std::size_t kMaxStateEntries = std::size_t{1} << 30;
inline constexpr double kDefaultTolerance = 1e-9;

/// q^n, failing with SizeGuardExceeded above `max_entries`.
std::size_t dimension(std::size_t n, std::size_t q, std::size_t max_entries = kMaxStateEntries);

/// Big-endian mixed-radix position of a tuple: the first wire is most significant.
std::size_t encode(std::span<const Symbol> t, std::size_t q);
Tuple decode(std::size_t index, std::size_t n, std::size_t q);

/// Dense amplitude table over n-tuples of {0..q-1}.
class State {
 public:
  State() = default;
  /// Throws ShapeMismatch unless amps.size() == q^n.
  State(std::size_t n, std::size_t q, std::vector<Complex> amps);

  static State zero(std::size_t n, std::size_t q = 2, std::size_t max_entries = kMaxStateEntries);

  std::size_t wires() const noexcept { return n_; }
  std::size_t alphabet() const noexcept { return q_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  Complex operator[](std::size_t i) const noexcept { return amps_[i]; }
  Complex& operator[](std::size_t i) noexcept { return amps_[i]; }
  Complex at(std::span<const Symbol> t) const;

  double norm() const noexcept;
  /// | ||s|| - 1 |
  double unit_deviation() const noexcept;

  State& operator+=(const State& other);
  State& operator-=(const State& other);
  State& operator*=(Complex c) noexcept;

  friend bool operator==(const State&, const State&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t q_ = 2;
  std::vector<Complex> amps_{Complex{0.0}};
};

State operator+(State a, const State& b);
State operator-(State a, const State& b);
State operator*(Complex c, State s);

/// Throws IndexOutOfRange if an entry is not below q.
State ket(std::span<const Symbol> v, std::size_t q = 2);
inline State ket(std::initializer_list<Symbol> v, std::size_t q = 2) {
  return ket(std::span<const Symbol>(v.begin(), v.size()), q);
}

/// sum_v conj(s(v)) t(v); throws ShapeMismatch.
Complex inner_product(const State& s, const State& t);

/// Every (v, s(v)) in position order, zero entries included.
std::vector<std::pair<Tuple, Complex>> decompose(const State& s);

/// Largest entrywise |a - b|; throws ShapeMismatch.
double max_abs_diff(const State& a, const State& b);
bool approx_equal(const State& a, const State& b, double tol = kDefaultTolerance);

/// A table of equally sized blocks indexed by m-tuples: the double power
/// (C^d)^(q^m). The curried view of a state is one of these.
class BlockTable {
 public:
  BlockTable() = default;
  BlockTable(std::size_t outer_arity, std::size_t q, std::size_t block_dim);
  BlockTable(std::size_t outer_arity, std::size_t q, std::size_t block_dim, std::vector<Complex> data);

  std::size_t outer_arity() const noexcept { return m_; }
  std::size_t alphabet() const noexcept { return q_; }
  std::size_t block_count() const noexcept { return blocks_; }
  std::size_t block_dim() const noexcept { return dim_; }

  std::span<const Complex> block(std::size_t a) const noexcept { return {data_.data() + a * dim_, dim_}; }
  std::span<Complex> block(std::size_t a) noexcept { return {data_.data() + a * dim_, dim_}; }
  std::span<const Complex> data() const noexcept { return data_; }

  friend bool operator==(const BlockTable&, const BlockTable&) = default;

 private:
  std::size_t m_ = 0;
  std::size_t q_ = 2;
  std::size_t blocks_ = 1;
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Apply the linear map phi (a d'×d matrix) to every block.
BlockTable dpmap(const Matrix& phi, const BlockTable& s);

double max_abs_diff(const BlockTable& a, const BlockTable& b);

}  // namespace qfocus
