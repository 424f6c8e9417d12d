#pragma once

// Brute-force reference for gate application on qubits, written with bit
// arithmetic only: no lenses, currying or strides from the library.

#include <complex>
#include <cstddef>
#include <vector>

namespace naive {

using cd = std::complex<double>;

// bit of wire w in an n-wire basis index (wire 0 is most significant)
inline std::size_t bit(std::size_t index, std::size_t n, std::size_t w) { return (index >> (n - 1 - w)) & 1U; }

// Apply `mat` (row-major, 2^k × 2^k) to the wires `wires` of an n-qubit state.
inline std::vector<cd> apply(const std::vector<std::size_t>& wires, const std::vector<cd>& mat,
                             const std::vector<cd>& amps, std::size_t n) {
  const std::size_t k = wires.size();
  const std::size_t local = std::size_t{1} << k;
  std::vector<cd> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    std::size_t row = 0;
    for (std::size_t w : wires) row = (row << 1) | bit(i, n, w);
    for (std::size_t col = 0; col < local; ++col) {
      std::size_t j = i;
      for (std::size_t p = 0; p < k; ++p) {
        const std::size_t b = (col >> (k - 1 - p)) & 1U;
        const std::size_t mask = std::size_t{1} << (n - 1 - wires[p]);
        j = b ? (j | mask) : (j & ~mask);
      }
      out[i] += mat[row * local + col] * amps[j];
    }
  }
  return out;
}

}  // namespace naive
