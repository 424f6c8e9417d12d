#include "qfocus/gates.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

namespace qfocus {

Gate::Gate(std::size_t in_wires, std::size_t out_wires, Matrix mat, std::size_t q)
    : m_(in_wires), n_(out_wires), q_(q), mat_(std::move(mat)) {
  const auto rows = static_cast<Eigen::Index>(dimension(n_, q_));
  const auto cols = static_cast<Eigen::Index>(dimension(m_, q_));
  if (mat_.rows() != rows || mat_.cols() != cols) {
    throw Error(ErrorCode::ShapeMismatch, "gate " + std::to_string(m_) + "->" + std::to_string(n_) + " needs a " +
                                              std::to_string(rows) + "x" + std::to_string(cols) + " matrix, got " +
                                              std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
  }
  if (!mat_.allFinite()) throw Error(ErrorCode::ShapeMismatch, "gate matrix has non-finite entries");
}

State Gate::apply(const State& s) const {
  if (s.wires() != m_ || s.alphabet() != q_) {
    throw Error(ErrorCode::ShapeMismatch, "gate expects " + std::to_string(m_) + " wires, state has " +
                                              std::to_string(s.wires()));
  }
  Eigen::Map<const Eigen::VectorXcd> in(s.amplitudes().data(), static_cast<Eigen::Index>(s.size()));
  Eigen::VectorXcd out = mat_ * in;
  return State(n_, q_, std::vector<Complex>(out.data(), out.data() + out.size()));
}

Matrix ket_bra(const State& k, const State& b) {
  if (k.alphabet() != b.alphabet()) throw Error(ErrorCode::ShapeMismatch, "ket_bra operands use different alphabets");
  Matrix out(static_cast<Eigen::Index>(b.size()), static_cast<Eigen::Index>(k.size()));
  for (std::size_t v = 0; v < k.size(); ++v) {
    for (std::size_t w = 0; w < b.size(); ++w) {
      out(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(v)) = k[v] * b[w];
    }
  }
  return out;
}

Gate hadamard() {
  const State k0 = ket({0});
  const State k1 = ket({1});
  Matrix m = ket_bra(k0, k0) + ket_bra(k0, k1) + ket_bra(k1, k0) - ket_bra(k1, k1);
  return Gate(1, 1, Complex(kInvSqrt2) * m);
}

namespace {

// Gate sending each basis tuple v to the basis tuple f(v).
template <class F>
Gate classical_gate(std::size_t wires, F&& f) {
  const std::size_t dim = dimension(wires, 2);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const Tuple image = f(decode(j, wires, 2));
    m(static_cast<Eigen::Index>(encode(image, 2)), static_cast<Eigen::Index>(j)) = 1.0;
  }
  return Gate(wires, wires, std::move(m));
}

}  // namespace

Gate cnot() {
  return classical_gate(2, [](const Tuple& v) { return Tuple{v[0], v[0] ^ v[1]}; });
}

Gate toffoli() {
  return classical_gate(3, [](const Tuple& v) { return Tuple{v[0], v[1], (v[0] & v[1]) ^ v[2]}; });
}

Gate swap_gate() {
  return classical_gate(2, [](const Tuple& v) { return Tuple{v[1], v[0]}; });
}

Gate identity_gate(std::size_t k, std::size_t q) {
  const auto dim = static_cast<Eigen::Index>(dimension(k, q));
  return Gate(k, k, Matrix::Identity(dim, dim), q);
}

Gate null_gate(std::size_t k, std::size_t q) {
  const auto dim = static_cast<Eigen::Index>(dimension(k, q));
  return Gate(k, k, Matrix::Zero(dim, dim), q);
}

namespace {

// "identity(3)" -> 3 when the name has the given head.
bool parse_sized(std::string_view name, std::string_view head, std::size_t& k) {
  if (name.size() < head.size() + 3 || name.substr(0, head.size()) != head) return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  const auto digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

}  // namespace

Gate builtin(std::string_view name, std::size_t q) {
  std::size_t k = 0;
  if (parse_sized(name, "identity", k)) return identity_gate(k, q);
  if (parse_sized(name, "null", k)) return null_gate(k, q);
  const bool qubit_only = name == "hadamard" || name == "cnot" || name == "toffoli" || name == "swap";
  if (!qubit_only) throw Error(ErrorCode::UnknownGate, "no builtin gate named '" + std::string(name) + "'");
  if (q != 2) {
    throw Error(ErrorCode::UnsupportedAlphabet, "builtin '" + std::string(name) + "' is defined for qubits only");
  }
  if (name == "hadamard") return hadamard();
  if (name == "cnot") return cnot();
  if (name == "toffoli") return toffoli();
  return swap_gate();
}

Gate vcomp(const Gate& f, const Gate& g) {
  if (g.out_wires() != f.in_wires() || g.alphabet() != f.alphabet()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot compose: inner arities " + std::to_string(g.out_wires()) +
                                              " and " + std::to_string(f.in_wires()));
  }
  return Gate(g.in_wires(), f.out_wires(), f.matrix() * g.matrix(), f.alphabet());
}

BlockTable apply_module(const Gate& g, const BlockTable& blocks) {
  if (blocks.outer_arity() != g.in_wires() || blocks.alphabet() != g.alphabet()) {
    throw Error(ErrorCode::ShapeMismatch, "gate on " + std::to_string(g.in_wires()) +
                                              " wires applied to a table of outer arity " +
                                              std::to_string(blocks.outer_arity()));
  }
  const Matrix& m = g.matrix();
  BlockTable out(g.out_wires(), g.alphabet(), blocks.block_dim());
  for (std::size_t i = 0; i < out.block_count(); ++i) {
    auto dst = out.block(i);
    for (std::size_t j = 0; j < blocks.block_count(); ++j) {
      const Complex c = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (c == Complex{0.0}) continue;
      auto src = blocks.block(j);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] += c * src[w];
    }
  }
  return out;
}

double unitarity_deviation(const Gate& g) {
  if (!g.is_square()) throw Error(ErrorCode::ShapeMismatch, "unitarity is defined for square gates only");
  const Matrix& m = g.matrix();
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Gate& a, const Gate& b) {
  if (a.matrix().rows() != b.matrix().rows() || a.matrix().cols() != b.matrix().cols()) {
    throw Error(ErrorCode::ShapeMismatch, "gate matrices differ in shape");
  }
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace qfocus
