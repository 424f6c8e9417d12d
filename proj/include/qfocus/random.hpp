#pragma once

#include <cstddef>
#include <random>

#include "qfocus/dpstate.hpp"
#include "qfocus/gates.hpp"
#include "qfocus/lens.hpp"

namespace qfocus {

using Rng = std::mt19937_64;

/// Gaussian amplitudes, normalized to unit length.
State random_state(std::size_t n, Rng& rng, std::size_t q = 2);
Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar-distributed unitary from the QR factorization of a Ginibre matrix.
Matrix random_unitary(std::size_t dim, Rng& rng);
Gate random_unitary_gate(std::size_t wires, Rng& rng, std::size_t q = 2);
/// Uniformly chosen injection of m wires into n (any order).
Lens random_lens(std::size_t n, std::size_t m, Rng& rng);

}  // namespace qfocus
