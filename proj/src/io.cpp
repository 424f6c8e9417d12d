#include "qfocus/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace qfocus {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

// Re-raise a lens/gate error with the field it came from.
[[noreturn]] void located(const Error& e, const std::string& where) {
  throw Error(e.code(), where + ": " + e.detail());
}

std::size_t get_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) parse_fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Gate parse_custom_gate(const json& g, std::size_t q, const std::string& where) {
  if (!g.contains("wires")) parse_fail(where, "missing \"wires\"");
  if (!g.contains("matrix") || !g["matrix"].is_array()) parse_fail(where + ".matrix", "expected an array");
  const std::size_t m = get_count(g["wires"], where + ".wires");
  const std::size_t dim = dimension(m, q, std::size_t{1} << kMaxDenseWires);
  const json& entries = g["matrix"];
  if (entries.size() != dim * dim) {
    throw Error(ErrorCode::ArityMismatch, where + ".matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                              std::to_string(entries.size()));
  }
  Matrix mat(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& e = entries[k];
    const std::string at = where + ".matrix[" + std::to_string(k) + "]";
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) parse_fail(at, "expected [re, im]");
    // column-major
    mat(static_cast<Eigen::Index>(k % dim), static_cast<Eigen::Index>(k / dim)) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  try {
    return Gate(m, m, std::move(mat), q);
  } catch (const Error& err) {
    located(err, where);
  }
}

bool is_builtin(const std::string& name, const Gate& g) {
  try {
    const Gate b = builtin(name, g.alphabet());
    return b.in_wires() == g.in_wires() && max_abs_diff(b, g) == 0.0;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed JSON");
  }
  if (!doc.is_object()) parse_fail("<root>", "expected an object");
  const std::size_t q = doc.contains("qudit_dim") ? get_count(doc["qudit_dim"], "qudit_dim") : 2;
  if (q < 2 || q > 36) throw Error(ErrorCode::UnsupportedAlphabet, "qudit_dim: must lie in [2, 36]");
  if (!doc.contains("wires")) parse_fail("wires", "missing");
  const std::size_t n = get_count(doc["wires"], "wires");

  std::map<std::string, std::shared_ptr<const Gate>> custom;
  if (doc.contains("gates")) {
    if (!doc["gates"].is_array()) parse_fail("gates", "expected an array");
    for (std::size_t k = 0; k < doc["gates"].size(); ++k) {
      const json& g = doc["gates"][k];
      const std::string where = "gates[" + std::to_string(k) + "]";
      if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) parse_fail(where + ".name", "expected a string");
      custom[g["name"].get<std::string>()] = std::make_shared<const Gate>(parse_custom_gate(g, q, where));
    }
  }

  Circuit c(n, q);
  if (!doc.contains("ops")) return c;
  if (!doc["ops"].is_array()) parse_fail("ops", "expected an array");
  std::map<std::string, std::shared_ptr<const Gate>> builtins;
  for (std::size_t k = 0; k < doc["ops"].size(); ++k) {
    const json& op = doc["ops"][k];
    const std::string where = "ops[" + std::to_string(k) + "]";
    if (!op.is_object() || !op.contains("gate") || !op["gate"].is_string()) parse_fail(where + ".gate", "expected a string");
    if (!op.contains("lens") || !op["lens"].is_array()) parse_fail(where + ".lens", "expected an index array");
    const std::string name = op["gate"].get<std::string>();

    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < op["lens"].size(); ++j) {
      idx.push_back(get_count(op["lens"][j], where + ".lens[" + std::to_string(j) + "]"));
    }
    std::optional<Lens> lens;
    try {
      lens.emplace(n, std::move(idx));
    } catch (const Error& e) {
      located(e, where + ".lens");
    }

    std::shared_ptr<const Gate> gate;
    if (auto it = custom.find(name); it != custom.end()) {
      gate = it->second;
    } else if (auto bt = builtins.find(name); bt != builtins.end()) {
      gate = bt->second;
    } else {
      try {
        gate = builtins[name] = std::make_shared<const Gate>(builtin(name, q));
      } catch (const Error& e) {
        located(e, where + ".gate");
      }
    }
    try {
      c.add(std::move(*lens), name, gate);
    } catch (const Error& e) {
      located(e, where);
    }
  }
  return c;
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_circuit(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.detail());
  }
}

std::string emit_circuit(const Circuit& c) {
  using ordered = nlohmann::ordered_json;
  std::vector<std::string> gates;
  std::vector<std::string> ops;
  std::map<std::string, bool> seen;
  for (const Step& s : c.steps()) {
    if (!seen.contains(s.gate_name)) {
      seen[s.gate_name] = true;
      if (!is_builtin(s.gate_name, *s.gate)) {
        ordered entries = ordered::array();
        const Matrix& m = s.gate->matrix();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          for (Eigen::Index i = 0; i < m.rows(); ++i) entries.push_back({m(i, j).real(), m(i, j).imag()});
        }
        gates.push_back(ordered{{"name", s.gate_name}, {"wires", s.gate->in_wires()}, {"matrix", entries}}.dump());
      }
    }
    const auto idx = s.lens.indices();
    ops.push_back(ordered{{"gate", s.gate_name}, {"lens", std::vector<std::size_t>(idx.begin(), idx.end())}}.dump());
  }
  auto list = [](const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t k = 0; k < items.size(); ++k) out += (k ? ",\n    " : "\n    ") + items[k];
    return out + (items.empty() ? "]" : "\n  ]");
  };
  std::string out = "{\n  \"qudit_dim\": " + std::to_string(c.alphabet()) + ",\n  \"wires\": " +
                    std::to_string(c.wires()) + ",\n";
  if (!gates.empty()) out += "  \"gates\": " + list(gates) + ",\n";
  out += "  \"ops\": " + list(ops) + "\n}\n";
  return out;
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string out(buf, ptr);
  if (std::isfinite(x) && out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

std::string format_tuple(std::span<const Symbol> t) {
  static constexpr std::string_view digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  out.reserve(t.size());
  for (Symbol s : t) out.push_back(digits.at(s));
  return out;
}

Tuple parse_tuple(std::string_view text, std::size_t q) {
  Tuple t;
  t.reserve(text.size());
  for (char ch : text) {
    Symbol s = 0;
    if (ch >= '0' && ch <= '9') {
      s = static_cast<Symbol>(ch - '0');
    } else if (ch >= 'a' && ch <= 'z') {
      s = static_cast<Symbol>(ch - 'a' + 10);
    } else {
      throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a basis tuple");
    }
    if (s >= q) {
      throw Error(ErrorCode::IndexOutOfRange, "digit '" + std::string(1, ch) + "' not below " + std::to_string(q));
    }
    t.push_back(s);
  }
  return t;
}

std::string format_state(const State& s, double threshold) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double mag = std::abs(s[i]);
    if (mag == 0.0 || mag < threshold) continue;
    out += format_tuple(decode(i, s.wires(), s.alphabet()));
    out += ' ';
    out += format_real(s[i].real());
    out += ' ';
    out += format_real(s[i].imag());
    out += '\n';
  }
  return out;
}

State parse_state(std::string_view text, std::size_t q, std::size_t wires) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<State> s;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    std::istringstream fields(line);
    std::string digits;
    if (!(fields >> digits) || digits.front() == '#') continue;
    double re = 0.0, im = 0.0;
    if (!(fields >> re >> im)) parse_fail(where, "expected '<tuple> <re> <im>'");
    std::string extra;
    if (fields >> extra) parse_fail(where, "trailing text");
    if (!std::isfinite(re) || !std::isfinite(im)) parse_fail(where, "non-finite amplitude");
    Tuple t;
    try {
      t = parse_tuple(digits, q);
    } catch (const Error& e) {
      located(e, where);
    }
    if (!s) {
      s = State::zero(t.size(), q);
      seen.assign(s->size(), false);
    }
    if (t.size() != s->wires()) parse_fail(where, "tuple arity differs from earlier entries");
    const std::size_t pos = encode(t, q);
    if (seen[pos]) parse_fail(where, "duplicate entry for " + digits);
    seen[pos] = true;
    (*s)[pos] = Complex(re, im);
  }
  if (!s) return State::zero(wires, q);
  if (wires != 0 && s->wires() != wires) {
    throw Error(ErrorCode::ArityMismatch, "state has " + std::to_string(s->wires()) + " wires, expected " +
                                              std::to_string(wires));
  }
  return *s;
}

}  // namespace qfocus
