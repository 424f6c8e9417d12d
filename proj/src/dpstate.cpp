#include "qfocus/dpstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfocus {

std::size_t dimension(std::size_t n, std::size_t q, std::size_t max_entries) {
  if (q < 1) throw Error(ErrorCode::UnsupportedAlphabet, "alphabet size must be positive");
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (dim > max_entries / q) {
      throw Error(ErrorCode::SizeGuardExceeded, std::to_string(q) + "^" + std::to_string(n) + " exceeds " +
                                                    std::to_string(max_entries) + " entries");
    }
    dim *= q;
  }
  if (dim > max_entries) throw Error(ErrorCode::SizeGuardExceeded, "state too large");
  return dim;
}

std::size_t encode(std::span<const Symbol> t, std::size_t q) {
  std::size_t pos = 0;
  for (Symbol s : t) {
    if (s >= q) throw Error(ErrorCode::IndexOutOfRange, "symbol " + std::to_string(s) + " not below " + std::to_string(q));
    pos = pos * q + s;
  }
  return pos;
}

Tuple decode(std::size_t index, std::size_t n, std::size_t q) {
  Tuple t(n);
  for (std::size_t k = n; k-- > 0;) {
    t[k] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return t;
}

State::State(std::size_t n, std::size_t q, std::vector<Complex> amps) : n_(n), q_(q), amps_(std::move(amps)) {
  if (amps_.size() != dimension(n, q)) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(dimension(n, q)) + " amplitudes, got " +
                                              std::to_string(amps_.size()));
  }
}

State State::zero(std::size_t n, std::size_t q, std::size_t max_entries) {
  return State(n, q, std::vector<Complex>(dimension(n, q, max_entries)));
}

Complex State::at(std::span<const Symbol> t) const {
  if (t.size() != n_) throw Error(ErrorCode::ArityMismatch, "tuple arity differs from the state's");
  return amps_[encode(t, q_)];
}

double State::norm() const noexcept {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

double State::unit_deviation() const noexcept { return std::abs(norm() - 1.0); }

namespace {

void require_same_shape(const State& a, const State& b) {
  if (a.wires() != b.wires() || a.alphabet() != b.alphabet()) {
    throw Error(ErrorCode::ShapeMismatch, "states have different wire counts or alphabets");
  }
}

}  // namespace

State& State::operator+=(const State& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] += other.amps_[i];
  return *this;
}

State& State::operator-=(const State& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] -= other.amps_[i];
  return *this;
}

State& State::operator*=(Complex c) noexcept {
  for (Complex& a : amps_) a *= c;
  return *this;
}

State operator+(State a, const State& b) { return a += b; }
State operator-(State a, const State& b) { return a -= b; }
State operator*(Complex c, State s) { return s *= c; }

State ket(std::span<const Symbol> v, std::size_t q) {
  State s = State::zero(v.size(), q);
  s[encode(v, q)] = 1.0;
  return s;
}

Complex inner_product(const State& s, const State& t) {
  require_same_shape(s, t);
  Complex sum{0.0};
  for (std::size_t i = 0; i < s.size(); ++i) sum += std::conj(s[i]) * t[i];
  return sum;
}

std::vector<std::pair<Tuple, Complex>> decompose(const State& s) {
  std::vector<std::pair<Tuple, Complex>> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.emplace_back(decode(i, s.wires(), s.alphabet()), s[i]);
  return out;
}

double max_abs_diff(const State& a, const State& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool approx_equal(const State& a, const State& b, double tol) { return max_abs_diff(a, b) <= tol; }

BlockTable::BlockTable(std::size_t outer_arity, std::size_t q, std::size_t block_dim)
    : m_(outer_arity), q_(q), blocks_(dimension(outer_arity, q)), dim_(block_dim), data_(blocks_ * block_dim) {}

BlockTable::BlockTable(std::size_t outer_arity, std::size_t q, std::size_t block_dim, std::vector<Complex> data)
    : m_(outer_arity), q_(q), blocks_(dimension(outer_arity, q)), dim_(block_dim), data_(std::move(data)) {
  if (data_.size() != blocks_ * dim_) {
    throw Error(ErrorCode::ShapeMismatch, "block table expects " + std::to_string(blocks_ * dim_) + " entries");
  }
}

BlockTable dpmap(const Matrix& phi, const BlockTable& s) {
  if (static_cast<std::size_t>(phi.cols()) != s.block_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "map expects blocks of dimension " + std::to_string(phi.cols()) +
                                              ", table has " + std::to_string(s.block_dim()));
  }
  const auto rows = static_cast<std::size_t>(phi.rows());
  BlockTable out(s.outer_arity(), s.alphabet(), rows);
  for (std::size_t a = 0; a < s.block_count(); ++a) {
    auto src = s.block(a);
    auto dst = out.block(a);
    for (std::size_t i = 0; i < rows; ++i) {
      Complex acc{0.0};
      for (std::size_t j = 0; j < src.size(); ++j) acc += phi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * src[j];
      dst[i] = acc;
    }
  }
  return out;
}

double max_abs_diff(const BlockTable& a, const BlockTable& b) {
  if (a.outer_arity() != b.outer_arity() || a.alphabet() != b.alphabet() || a.block_dim() != b.block_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "block tables have different shapes");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

}  // namespace qfocus
