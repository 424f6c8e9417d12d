#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "qfocus/circuits.hpp"

namespace qfocus {

/// Circuit file (JSON):
///
///   {"qudit_dim": 2, "wires": 3,
///    "gates": [{"name": "g", "wires": 1, "matrix": [[re, im], ...]}],
///    "ops": [{"gate": "cnot", "lens": [0, 1]}, {"gate": "g", "lens": [2]}]}
///
/// Custom matrices are flattened column-major; columns follow the
/// big-endian basis order. Errors name the offending field, e.g. ops[1].lens.
Circuit parse_circuit(std::string_view text);
Circuit load_circuit(const std::filesystem::path& path);

/// Inverse of parse_circuit; non-builtin gates are written to "gates".
std::string emit_circuit(const Circuit& c);

/// Shortest text that reads back as the same double, always with a
/// fractional part or exponent ("1.0", "0.7071067811865476").
std::string format_real(double x);

/// One line per entry with magnitude >= threshold (zeros are never printed):
/// "<tuple digits> <re> <im>".
std::string format_state(const State& s, double threshold = 0.0);

/// Reads the format above; missing entries are zero. The wire count is the
/// digit-string length, or `wires` when the file has no entries.
State parse_state(std::string_view text, std::size_t q = 2, std::size_t wires = 0);

/// A basis tuple written as digits ("0110"); base-36 digits for q > 10.
Tuple parse_tuple(std::string_view digits, std::size_t q = 2);
std::string format_tuple(std::span<const Symbol> t);

}  // namespace qfocus
