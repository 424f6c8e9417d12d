#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qfocus/focus.hpp"
#include "qfocus/random.hpp"

namespace qfocus {

// Dense matrix semantics: a gate inside a circuit is padded with identities
// by Kronecker product and sandwiched between wire permutations. Naive on
// purpose; it exists to check focus_apply.

struct DenseOperator {
  std::size_t wires = 0;
  std::size_t q = 2;
  Matrix mat;

  State apply(const State& s) const;
};

/// Block (i, j) is a(i, j)·b, so `a` acts on the more significant wires.
Matrix kron(const Matrix& a, const Matrix& b);

/// U(pi)|i_0 .. i_{n-1}> = |j> with j[pi[k]] = i[k]. Throws InvalidPermutation.
DenseOperator perm_matrix(std::size_t n, std::span<const std::size_t> pi, std::size_t q = 2,
                          std::size_t max_wires = kMaxDenseWires);

/// U(pi)^-1 (M ⊗ I) U(pi), pi moving the lens wires to the leading positions.
/// Throws SizeGuardExceeded.
DenseOperator build_full_matrix(const Lens& l, const Gate& g, std::size_t max_wires = kMaxDenseWires);

/// The same operator assembled from focus_apply on every basis ket.
DenseOperator build_full_matrix_by_columns(const Lens& l, const Gate& g, std::size_t max_wires = kMaxDenseWires);

/// Max over `trials` random states of |dense·s - focus_apply(l, g, s)|∞.
double assert_equiv(const Lens& l, const Gate& g, std::size_t trials, Rng& rng,
                    std::size_t max_wires = kMaxDenseWires);

}  // namespace qfocus
