#pragma once

#include <cstddef>
#include <numbers>
#include <string_view>

#include "qfocus/dpstate.hpp"

namespace qfocus {

/// 1/sqrt(2), correctly rounded.
inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

/// A morphism from m-wire to n-wire states, represented by its q^n × q^m
/// matrix. Column j is the image of the basis tuple at position j.
class Gate {
 public:
  Gate() = default;
  /// Throws ShapeMismatch on wrong dimensions or non-finite entries.
  Gate(std::size_t in_wires, std::size_t out_wires, Matrix mat, std::size_t q = 2);

  std::size_t in_wires() const noexcept { return m_; }
  std::size_t out_wires() const noexcept { return n_; }
  std::size_t alphabet() const noexcept { return q_; }
  bool is_square() const noexcept { return m_ == n_; }
  const Matrix& matrix() const noexcept { return mat_; }

  State apply(const State& s) const;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::size_t q_ = 2;
  Matrix mat_ = Matrix::Identity(1, 1);
};

inline Gate gate_from_matrix(std::size_t in_wires, std::size_t out_wires, Matrix mat, std::size_t q = 2) {
  return Gate(in_wires, out_wires, std::move(mat), q);
}

/// Rank-one matrix whose column v is k(v)·b: maps k's arity to b's arity.
Matrix ket_bra(const State& k, const State& b);

Gate hadamard();
Gate cnot();
Gate toffoli();
Gate swap_gate();
Gate identity_gate(std::size_t k, std::size_t q = 2);
Gate null_gate(std::size_t k, std::size_t q = 2);

/// Resolve "hadamard", "cnot", "toffoli", "swap", "identity(k)" or "null(k)".
/// Throws UnknownGate or UnsupportedAlphabet.
Gate builtin(std::string_view name, std::size_t q = 2);

/// F ∘ G: apply g first. Throws ShapeMismatch.
Gate vcomp(const Gate& f, const Gate& g);

/// Output block i = sum_j M(i, j) · block j. The outer arity of `blocks`
/// must equal the gate's input arity.
BlockTable apply_module(const Gate& g, const BlockTable& blocks);

/// Max entry of |M†M - I|; throws ShapeMismatch for non-square gates.
double unitarity_deviation(const Gate& g);

/// Largest entrywise |A - B| between two gate matrices of equal shape.
double max_abs_diff(const Gate& a, const Gate& b);

}  // namespace qfocus
