#include "qfocus/lens.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qfocus {

Lens::Lens(std::size_t n, std::vector<std::size_t> idx) : n_(n), idx_(std::move(idx)) {
  std::vector<bool> seen(n_, false);
  for (std::size_t i : idx_) {
    if (i >= n_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "lens entry " + std::to_string(i) + " not below " + std::to_string(n_));
    }
    if (seen[i]) throw Error(ErrorCode::DuplicateIndex, "lens entry " + std::to_string(i) + " repeated");
    seen[i] = true;
  }
}

Lens Lens::identity(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return Lens(n, std::move(idx));
}

Lens Lens::empty(std::size_t n) { return Lens(n, {}); }

Lens Lens::single(std::size_t n, std::size_t i) { return Lens(n, {i}); }

Lens Lens::pair(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::EqualIndices, "pair lens needs distinct wires, got " + std::to_string(i));
  return Lens(n, {i, j});
}

Lens Lens::left(std::size_t p, std::size_t s) {
  std::vector<std::size_t> idx(p);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return Lens(p + s, std::move(idx));
}

Lens Lens::right(std::size_t p, std::size_t s) {
  std::vector<std::size_t> idx(s);
  std::iota(idx.begin(), idx.end(), p);
  return Lens(p + s, std::move(idx));
}

bool Lens::contains(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::IndexOutOfRange, "wire " + std::to_string(i) + " not below " + std::to_string(n_));
  return std::find(idx_.begin(), idx_.end(), i) != idx_.end();
}

std::size_t Lens::index_of(std::size_t i) const {
  auto it = std::find(idx_.begin(), idx_.end(), i);
  if (it == idx_.end()) throw Error(ErrorCode::NotInLens, "wire " + std::to_string(i) + " is not in the lens");
  return static_cast<std::size_t>(it - idx_.begin());
}

bool Lens::is_sorted() const noexcept { return std::is_sorted(idx_.begin(), idx_.end()); }

Lens Lens::complement() const {
  std::vector<bool> used(n_, false);
  for (std::size_t i : idx_) used[i] = true;
  std::vector<std::size_t> rest;
  rest.reserve(n_ - idx_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    if (!used[i]) rest.push_back(i);
  }
  Lens out;
  out.n_ = n_;
  out.idx_ = std::move(rest);
  return out;
}

Tuple extract(const Lens& l, std::span<const Symbol> t) {
  if (t.size() != l.codomain()) {
    throw Error(ErrorCode::ArityMismatch,
                "extract expects arity " + std::to_string(l.codomain()) + ", got " + std::to_string(t.size()));
  }
  Tuple out(l.arity());
  for (std::size_t k = 0; k < l.arity(); ++k) out[k] = t[l[k]];
  return out;
}

Tuple merge(const Lens& l, std::span<const Symbol> v, std::span<const Symbol> c) {
  if (v.size() != l.arity() || c.size() != l.codomain() - l.arity()) {
    throw Error(ErrorCode::ArityMismatch, "merge expects arities " + std::to_string(l.arity()) + " and " +
                                              std::to_string(l.codomain() - l.arity()));
  }
  Tuple out(l.codomain());
  std::vector<bool> used(l.codomain(), false);
  for (std::size_t k = 0; k < l.arity(); ++k) {
    out[l[k]] = v[k];
    used[l[k]] = true;
  }
  // complement positions in ascending order
  std::size_t j = 0;
  for (std::size_t i = 0; i < l.codomain(); ++i) {
    if (!used[i]) out[i] = c[j++];
  }
  return out;
}

Lens compose(const Lens& outer, const Lens& inner) {
  if (inner.codomain() != outer.arity()) {
    throw Error(ErrorCode::ArityMismatch, "lens composition: inner codomain " + std::to_string(inner.codomain()) +
                                              " != outer arity " + std::to_string(outer.arity()));
  }
  std::vector<std::size_t> idx(inner.arity());
  for (std::size_t k = 0; k < inner.arity(); ++k) idx[k] = outer[inner[k]];
  return Lens(outer.codomain(), std::move(idx));
}

LensFactors factor(const Lens& l) {
  const auto src = l.indices();
  std::vector<std::size_t> sorted(src.begin(), src.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> perm(l.arity());
  for (std::size_t k = 0; k < l.arity(); ++k) {
    perm[k] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), src[k]) - sorted.begin());
  }
  return {Lens(l.codomain(), std::move(sorted)), Lens(l.arity(), std::move(perm))};
}

bool disjoint(const Lens& a, const Lens& b) {
  if (a.codomain() != b.codomain()) {
    throw Error(ErrorCode::ArityMismatch, "disjointness needs a shared codomain");
  }
  std::vector<bool> used(a.codomain(), false);
  for (std::size_t i : a.indices()) used[i] = true;
  return std::none_of(b.indices().begin(), b.indices().end(), [&](std::size_t i) { return used[i]; });
}

Lens concat(const Lens& a, const Lens& b) {
  if (a.codomain() != b.codomain()) {
    throw Error(ErrorCode::ArityMismatch, "concatenation needs a shared codomain");
  }
  std::vector<std::size_t> idx(a.indices().begin(), a.indices().end());
  idx.insert(idx.end(), b.indices().begin(), b.indices().end());
  return Lens(a.codomain(), std::move(idx));
}

}  // namespace qfocus
