#include "qfocus/circuits.hpp"

#include <cmath>

namespace qfocus {

Circuit& Circuit::add(Lens l, std::string name, std::shared_ptr<const Gate> g) {
  if (l.codomain() != n_) {
    throw Error(ErrorCode::ArityMismatch, "step lens targets " + std::to_string(l.codomain()) + " wires, circuit has " +
                                              std::to_string(n_));
  }
  if (!g->is_square() || g->in_wires() != l.arity()) {
    throw Error(ErrorCode::ArityMismatch, "gate '" + name + "' acts on " + std::to_string(g->in_wires()) +
                                              " wires but the lens selects " + std::to_string(l.arity()));
  }
  if (g->alphabet() != q_) throw Error(ErrorCode::UnsupportedAlphabet, "gate '" + name + "' uses another alphabet");
  steps_.push_back({std::move(l), std::move(name), std::move(g)});
  return *this;
}

Circuit& Circuit::add(Lens l, std::string name, Gate g) {
  return add(std::move(l), std::move(name), std::make_shared<const Gate>(std::move(g)));
}

Circuit& Circuit::add(Lens l, std::string_view builtin_name) {
  return add(std::move(l), std::string(builtin_name), builtin(builtin_name, q_));
}

Circuit& Circuit::add(std::initializer_list<std::size_t> wires, std::string_view builtin_name) {
  return add(Lens(n_, std::vector<std::size_t>(wires)), builtin_name);
}

Circuit vcomp(const Circuit& f, const Circuit& g) {
  if (f.wires() != g.wires() || f.alphabet() != g.alphabet()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot compose circuits on different wire counts");
  }
  Circuit out(f.wires(), f.alphabet());
  for (const Step& s : g.steps()) out.add(s.lens, s.gate_name, s.gate);
  for (const Step& s : f.steps()) out.add(s.lens, s.gate_name, s.gate);
  return out;
}

Circuit focus(const Lens& l, const Circuit& c) {
  if (l.arity() != c.wires()) {
    throw Error(ErrorCode::ArityMismatch, "lens selects " + std::to_string(l.arity()) + " wires, circuit has " +
                                              std::to_string(c.wires()));
  }
  Circuit out(l.codomain(), c.alphabet());
  for (const Step& s : c.steps()) out.add(compose(l, s.lens), s.gate_name, s.gate);
  return out;
}

State run_circuit(const Circuit& c, const State& s, const FocusOptions& opts) {
  if (s.wires() != c.wires() || s.alphabet() != c.alphabet()) {
    throw Error(ErrorCode::ShapeMismatch, "circuit has " + std::to_string(c.wires()) + " wires, state has " +
                                              std::to_string(s.wires()));
  }
  State out = s;
  for (const Step& step : c.steps()) out = focus_apply(step.lens, *step.gate, out, opts);
  return out;
}

Gate circuit_gate(const Circuit& c, std::size_t max_wires) {
  const std::size_t dim = dimension(c.wires(), c.alphabet(), std::size_t{1} << max_wires);
  Matrix full(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const State col = run_circuit(c, ket(decode(j, c.wires(), c.alphabet()), c.alphabet()));
    for (std::size_t i = 0; i < dim; ++i) full(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = col[i];
  }
  return Gate(c.wires(), c.wires(), std::move(full), c.alphabet());
}

ShorComponents shor_components() {
  ShorComponents sc;
  sc.bit_flip_enc = Circuit(3);
  sc.bit_flip_enc.add({0, 1}, "cnot").add({0, 2}, "cnot");

  Circuit toffoli_step(3);
  toffoli_step.add({1, 2, 0}, "toffoli");
  sc.bit_flip_dec = vcomp(toffoli_step, sc.bit_flip_enc);

  sc.hadamard3 = Circuit(3);
  sc.hadamard3.add({0}, "hadamard").add({1}, "hadamard").add({2}, "hadamard");

  sc.sign_flip_dec = vcomp(sc.bit_flip_dec, sc.hadamard3);
  sc.sign_flip_enc = vcomp(sc.hadamard3, sc.bit_flip_enc);

  const Lens t0(9, {0, 1, 2});
  const Lens t1(9, {3, 4, 5});
  const Lens t2(9, {6, 7, 8});
  const Lens heads(9, {0, 3, 6});
  sc.shor_enc = vcomp(focus(t0, sc.bit_flip_enc),
                      vcomp(focus(t1, sc.bit_flip_enc), vcomp(focus(t2, sc.bit_flip_enc), focus(heads, sc.sign_flip_enc))));
  // mirror of the encoder: decode each triple, then undo the sign-flip layer
  sc.shor_dec = vcomp(focus(heads, sc.sign_flip_dec),
                      vcomp(focus(t2, sc.bit_flip_dec), vcomp(focus(t1, sc.bit_flip_dec), focus(t0, sc.bit_flip_dec))));
  return sc;
}

Circuit ghz(std::size_t depth) {
  if (depth == 0) {
    Circuit c(1);
    c.add({0}, "hadamard");
    return c;
  }
  const std::size_t m = depth - 1;
  const std::size_t n = depth + 1;
  Circuit last(n);
  last.add(Lens::pair(n, m, m + 1), "cnot");
  return vcomp(last, focus(Lens::single(n, m + 1).complement(), ghz(m)));
}

Circuit rev_circuit(std::size_t n) {
  Circuit c(n);
  for (std::size_t i = 0; i < n / 2; ++i) c.add(Lens::pair(n, i, n - i - 1), "swap");
  return c;
}

std::vector<double> proj(const Lens& l, const State& s) {
  if (s.wires() != l.codomain()) throw Error(ErrorCode::ShapeMismatch, "proj: state arity differs from lens codomain");
  const BlockTable blocks = curry(l, s);
  std::vector<double> out(blocks.block_count());
  for (std::size_t a = 0; a < out.size(); ++a) {
    double sum = 0.0;
    for (const Complex& x : blocks.block(a)) sum += std::norm(x);
    out[a] = std::sqrt(sum);
  }
  return out;
}

}  // namespace qfocus
