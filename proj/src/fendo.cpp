#include "qfocus/fendo.hpp"

#include <string>

namespace qfocus {

FocEndo FocEndo::make(const Lens& l, const Gate& g) {
  if (!g.is_square() || g.in_wires() != l.arity()) {
    throw Error(ErrorCode::ShapeMismatch, "gate arity " + std::to_string(g.in_wires()) + " does not match lens arity " +
                                              std::to_string(l.arity()));
  }
  if (l.is_sorted()) return FocEndo(l, g, g.alphabet());
  auto [basis, perm] = factor(l);
  return FocEndo(std::move(basis), focus(perm, g), g.alphabet());
}

FocEndo FocEndo::unit(std::size_t n, std::size_t q) { return FocEndo(Lens::empty(n), identity_gate(0, q), q); }

FocEndo FocEndo::err(std::size_t n, std::size_t q) { return FocEndo(Lens::identity(n), std::nullopt, q); }

Gate FocEndo::gate() const {
  if (gate_) return *gate_;
  dimension(wires(), q_, std::size_t{1} << kMaxDenseWires);
  return null_gate(wires(), q_);
}

State FocEndo::apply(const State& s, const FocusOptions& opts) const {
  if (s.wires() != wires() || s.alphabet() != q_) {
    throw Error(ErrorCode::ShapeMismatch, "focused endomorphism on " + std::to_string(wires()) +
                                              " wires applied to a state with " + std::to_string(s.wires()));
  }
  if (!gate_) return State::zero(s.wires(), s.alphabet());
  return focus_apply(support_, *gate_, s, opts);
}

Gate par_comp(const Gate& f, const Gate& g) {
  const std::size_t p = f.in_wires();
  const std::size_t s = g.in_wires();
  return vcomp(focus(Lens::left(p, s), f), focus(Lens::right(p, s), g));
}

FocEndo comp_fendo(const FocEndo& a, const FocEndo& b) {
  if (a.wires() != b.wires() || a.alphabet() != b.alphabet()) {
    throw Error(ErrorCode::ShapeMismatch, "focused endomorphisms live on different circuits");
  }
  if (a.is_err() || b.is_err() || !disjoint(a.support(), b.support())) return FocEndo::err(a.wires(), a.alphabet());
  return FocEndo::make(concat(a.support(), b.support()), par_comp(a.gate(), b.gate()));
}

bool approx_equal(const FocEndo& a, const FocEndo& b, double tol) {
  if (a.is_err() != b.is_err() || a.alphabet() != b.alphabet() || a.support() != b.support()) return false;
  if (a.is_err()) return true;
  return max_abs_diff(a.gate(), b.gate()) <= tol;
}

FocEndo compn_fendo(std::span<const FocEndo> family, std::size_t n, const IndexPredicate& pred, std::size_t q) {
  return big_op(family, pred, FocEndo::unit(n, q), [](FocEndo acc, const FocEndo& f) { return comp_fendo(acc, f); });
}

Action fendo_mor(const FocEndo& f, const FocusOptions& opts) {
  return [f, opts](const State& s) { return f.apply(s, opts); };
}

Action compn_mor(std::span<const Action> family, const IndexPredicate& pred) {
  Action id = [](const State& s) { return s; };
  return big_op(family, pred, std::move(id), [](Action acc, const Action& f) -> Action {
    return [acc = std::move(acc), f](const State& s) { return acc(f(s)); };
  });
}

}  // namespace qfocus
