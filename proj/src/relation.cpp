#include "irack/relation.hpp"

#include <algorithm>

#include "irack/errors.hpp"

namespace irack {

Relation::Relation(std::size_t src_arity, std::size_t dst_arity, std::vector<Pair> pairs)
    : src_(src_arity), dst_(dst_arity), pairs_(std::move(pairs)) {
  for (const auto& [a, b] : pairs_) {
    if (a.arity() != src_ || b.arity() != dst_) {
      throw ArityMismatch("pair of arities " + std::to_string(a.arity()) + " -> " +
                          std::to_string(b.arity()) + " in a relation " + std::to_string(src_) +
                          " -> " + std::to_string(dst_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  if (pairs_.size() > kMaterializationCap) {
    throw CapExceeded("relation with " + std::to_string(pairs_.size()) +
                      " pairs exceeds the materialization cap");
  }
}

Relation Relation::identity(std::size_t k, std::size_t arity) {
  const std::size_t n = tuple_count(k, arity);
  if (n > kMaterializationCap) {
    throw CapExceeded("identity on A^" + std::to_string(arity) + " exceeds the materialization cap");
  }
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Tuple t = tuple_at(k, arity, i);
    pairs.emplace_back(t, t);
  }
  return Relation(arity, arity, std::move(pairs));
}

std::pair<std::vector<Pair>::const_iterator, std::vector<Pair>::const_iterator> Relation::image(
    const Tuple& src) const {
  auto lo = std::lower_bound(pairs_.begin(), pairs_.end(), src,
                             [](const Pair& p, const Tuple& t) { return p.first < t; });
  auto hi = std::upper_bound(lo, pairs_.end(), src,
                             [](const Tuple& t, const Pair& p) { return t < p.first; });
  return {lo, hi};
}

bool Relation::contains(const Tuple& src, const Tuple& dst) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair(src, dst));
}

std::optional<Element> Relation::max_element() const {
  std::optional<Element> best;
  for (const auto& [a, b] : pairs_) {
    for (Element e : a) best = best ? std::max(*best, e) : e;
    for (Element e : b) best = best ? std::max(*best, e) : e;
  }
  return best;
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.dst_arity() != s.src_arity()) {
    throw ArityMismatch("cannot compose " + std::to_string(r.src_arity()) + " -> " +
                        std::to_string(r.dst_arity()) + " with " + std::to_string(s.src_arity()) +
                        " -> " + std::to_string(s.dst_arity()));
  }
  std::vector<Pair> out;
  for (const auto& [a, b] : r.pairs()) {
    auto [lo, hi] = s.image(b);
    for (auto it = lo; it != hi; ++it) {
      out.emplace_back(a, it->second);
      if (out.size() > 2 * kMaterializationCap) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        if (out.size() > kMaterializationCap)
          throw CapExceeded("composite exceeds the materialization cap");
      }
    }
  }
  return Relation(r.src_arity(), s.dst_arity(), std::move(out));
}

Relation tensor(const Relation& r, const Relation& s) {
  if (r.size() != 0 && s.size() > kMaterializationCap / r.size()) {
    throw CapExceeded("tensor product exceeds the materialization cap");
  }
  std::vector<Pair> out;
  out.reserve(r.size() * s.size());
  for (const auto& [a, b] : r.pairs())
    for (const auto& [c, d] : s.pairs()) out.emplace_back(concat(a, c), concat(b, d));
  return Relation(r.src_arity() + s.src_arity(), r.dst_arity() + s.dst_arity(), std::move(out));
}

std::optional<RelationDiff> first_difference(const Relation& lhs, const Relation& rhs) {
  if (lhs.src_arity() != rhs.src_arity() || lhs.dst_arity() != rhs.dst_arity()) {
    throw ArityMismatch("comparing relations of different arities");
  }
  auto l = lhs.pairs().begin();
  auto r = rhs.pairs().begin();
  while (l != lhs.pairs().end() || r != rhs.pairs().end()) {
    if (r == rhs.pairs().end() || (l != lhs.pairs().end() && *l < *r)) return RelationDiff{*l, true};
    if (l == lhs.pairs().end() || *r < *l) return RelationDiff{*r, false};
    ++l;
    ++r;
  }
  return std::nullopt;
}

}  // namespace irack
