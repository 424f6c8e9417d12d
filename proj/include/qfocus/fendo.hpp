#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>

#include "qfocus/focus.hpp"

namespace qfocus {

/// A square gate together with its sorted support inside an n-wire circuit.
/// These form a commutative monoid under parallel composition, with an
/// empty-support unit and an absorbing error element.
class FocEndo {
 public:
  /// Factor `l` into its sorted basis and permutation, folding the
  /// permutation into the gate. Throws ShapeMismatch.
  static FocEndo make(const Lens& l, const Gate& g);
  static FocEndo unit(std::size_t n, std::size_t q = 2);
  static FocEndo err(std::size_t n, std::size_t q = 2);

  std::size_t wires() const noexcept { return support_.codomain(); }
  std::size_t support_size() const noexcept { return support_.arity(); }
  std::size_t alphabet() const noexcept { return q_; }
  const Lens& support() const noexcept { return support_; }
  bool is_err() const noexcept { return !gate_; }

  /// The local gate. For the error element this is null(n), materialized on
  /// demand under the dense size guard.
  Gate gate() const;

  /// focus(support, gate) on an n-wire state; the error element maps
  /// everything to zero.
  State apply(const State& s, const FocusOptions& opts = {}) const;

 private:
  FocEndo(Lens support, std::optional<Gate> gate, std::size_t q)
      : support_(std::move(support)), gate_(std::move(gate)), q_(q) {}

  Lens support_;
  std::optional<Gate> gate_;  // empty for the error element
  std::size_t q_ = 2;
};

/// focus(left, f) ∘ focus(right, g) on p + s wires.
Gate par_comp(const Gate& f, const Gate& g);

/// Parallel composition: disjoint supports combine, overlaps yield err.
/// Throws ShapeMismatch when the ambient wire counts differ.
FocEndo comp_fendo(const FocEndo& a, const FocEndo& b);

/// Same flag, support and gate matrix within `tol`.
bool approx_equal(const FocEndo& a, const FocEndo& b, double tol);

/// Left fold of `op` over the family members whose index satisfies `pred`,
/// in ascending index order, starting from `unit`.
template <class T, class Family, class Pred, class Op>
T big_op(const Family& family, Pred&& pred, T unit, Op&& op) {
  T acc = std::move(unit);
  for (std::size_t i = 0; i < std::size(family); ++i) {
    if (pred(i)) acc = op(std::move(acc), family[i]);
  }
  return acc;
}

using IndexPredicate = std::function<bool(std::size_t)>;
inline bool all_indices(std::size_t) { return true; }

FocEndo compn_fendo(std::span<const FocEndo> family, std::size_t n, const IndexPredicate& pred = all_indices,
                    std::size_t q = 2);

using Action = std::function<State(const State&)>;

Action fendo_mor(const FocEndo& f, const FocusOptions& opts = {});

/// Sequential big composition F0 ∘ F1 ∘ ... over selected indices, so the
/// highest selected index acts first.
Action compn_mor(std::span<const Action> family, const IndexPredicate& pred = all_indices);

}  // namespace qfocus
