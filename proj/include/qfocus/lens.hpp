#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qfocus/error.hpp"

namespace qfocus {

using Symbol = std::uint32_t;
// A tuple over the index alphabet {0..q-1}; its arity is its size.
using Tuple = std::vector<Symbol>;

/// An injection of m source wires into n target wires, stored as the
/// duplicate-free sequence of target indices. Validated once at construction.
class Lens {
 public:
  Lens() = default;

  /// Throws DuplicateIndex or IndexOutOfRange.
  Lens(std::size_t n, std::vector<std::size_t> idx);

  static Lens identity(std::size_t n);
  static Lens empty(std::size_t n);
  static Lens single(std::size_t n, std::size_t i);
  /// Throws EqualIndices when i == j.
  static Lens pair(std::size_t n, std::size_t i, std::size_t j);
  /// The first p wires of p + s.
  static Lens left(std::size_t p, std::size_t s);
  /// The last s wires of p + s.
  static Lens right(std::size_t p, std::size_t s);

  std::size_t codomain() const noexcept { return n_; }
  std::size_t arity() const noexcept { return idx_.size(); }
  std::span<const std::size_t> indices() const noexcept { return idx_; }
  std::size_t operator[](std::size_t k) const noexcept { return idx_[k]; }

  /// Throws IndexOutOfRange when i >= n.
  bool contains(std::size_t i) const;
  /// Position of wire i inside the lens; throws NotInLens.
  std::size_t index_of(std::size_t i) const;
  bool is_sorted() const noexcept;

  /// Sorted lens onto the wires not touched by this one.
  Lens complement() const;

  friend bool operator==(const Lens&, const Lens&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> idx_;
};

Tuple extract(const Lens& l, std::span<const Symbol> t);
Tuple merge(const Lens& l, std::span<const Symbol> v, std::span<const Symbol> c);

/// result[k] = outer[inner[k]]; requires inner.codomain() == outer.arity().
Lens compose(const Lens& outer, const Lens& inner);

struct LensFactors {
  Lens basis;  // same image, ascending
  Lens perm;   // permutation of [0, m)
};

/// compose(basis, perm) == l.
LensFactors factor(const Lens& l);

/// Throws ArityMismatch when codomains differ.
bool disjoint(const Lens& a, const Lens& b);

/// a ++ b as a lens into the shared codomain; requires disjoint supports.
Lens concat(const Lens& a, const Lens& b);

/// Classical focusing: propagate f on the selected view back into t.
template <class F>
Tuple focus1(const Lens& l, F&& f, std::span<const Symbol> t) {
  return merge(l, f(extract(l, t)), extract(l.complement(), t));
}

}  // namespace qfocus
