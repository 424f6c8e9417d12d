#pragma once

#include <catch_amalgamated.hpp>

#include <vector>

#include "qfocus/dpstate.hpp"
#include "qfocus/error.hpp"

namespace support {

template <class F>
qfocus::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const qfocus::Error& e) {
    return e.code();
  }
  FAIL("expected a qfocus::Error");
  return qfocus::ErrorCode::ParseError;
}

inline std::vector<qfocus::Complex> amps(const qfocus::State& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

inline double max_diff(const std::vector<qfocus::Complex>& a, const std::vector<qfocus::Complex>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// row-major copy of a gate matrix, as naive::apply wants it
inline std::vector<qfocus::Complex> row_major(const qfocus::Matrix& m) {
  std::vector<qfocus::Complex> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

}  // namespace support
