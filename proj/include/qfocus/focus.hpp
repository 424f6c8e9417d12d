#pragma once

#include <cstddef>
#include <span>

#include "qfocus/dpstate.hpp"
#include "qfocus/gates.hpp"
#include "qfocus/lens.hpp"

namespace qfocus {

/// Dense operators are only materialized while q^n <= 2^kMaxDenseWires.
inline constexpr std::size_t kMaxDenseWires = 14;

struct FocusOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// View s as a table indexed by the lens wires whose blocks range over the
/// complement wires: curry(l, s)(v)(w) = s(merge(l, v, w)).
BlockTable curry(const Lens& l, const State& s);

/// Inverse of curry: uncurry(l, f)(t) = f(extract(l, t))(extract(complement(l), t)).
State uncurry(const Lens& l, const BlockTable& f, std::size_t q = 2);

/// Embed an m-wire state into n wires, filling the complement wires from the
/// basis tuple v. Linear in `local`; on kets:
/// dpmerge(l, v, ket(u)) = ket(merge(l, u, extract(complement(l), v))).
State dpmerge(const Lens& l, std::span<const Symbol> v, const State& local);

/// Apply a square m-wire gate to the lens wires of an n-wire state.
///
/// This is the strided gather/apply/scatter path: amplitude offsets for the
/// lens wires and for every complement group are computed from the wire
/// strides, so no curried blocks are materialized. Complement groups touch
/// disjoint amplitudes, which is what makes `opts.parallel` safe.
State focus_apply(const Lens& l, const Gate& g, const State& s, const FocusOptions& opts = {});

/// uncurry(l, apply_module(g, curry(l, s))), the defining pipeline.
State focus_apply_reference(const Lens& l, const Gate& g, const State& s);

/// dpmerge(l, v, g(ket(extract(l, v)))); equals focus_apply(l, g, ket(v)).
State focus_dpbasis_step(const Lens& l, const Gate& g, std::span<const Symbol> v);

/// The focused gate as an n-wire matrix, built column by column.
/// Throws SizeGuardExceeded when q^n > 2^max_wires.
Gate focus(const Lens& l, const Gate& g, std::size_t max_wires = kMaxDenseWires);

}  // namespace qfocus
