#pragma once

// Finite relations A^m -> A^n between powers of a carrier.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irack/tuple.hpp"

namespace irack {

/// Relations with more pairs than this are refused.
inline constexpr std::size_t kMaterializationCap = 1'000'000;

using Pair = std::pair<Tuple, Tuple>;

class Relation {
 public:
  Relation() = default;
  /// Sorts and deduplicates; throws ArityMismatch on a pair of the wrong shape and
  /// CapExceeded above the cap.
  Relation(std::size_t src_arity, std::size_t dst_arity, std::vector<Pair> pairs);

  static Relation empty(std::size_t src_arity, std::size_t dst_arity) {
    return Relation(src_arity, dst_arity, {});
  }
  /// Diagonal on A^n; throws CapExceeded when k^n is over the cap.
  static Relation identity(std::size_t k, std::size_t arity);

  std::size_t src_arity() const noexcept { return src_; }
  std::size_t dst_arity() const noexcept { return dst_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool is_empty() const noexcept { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  bool contains(const Tuple& src, const Tuple& dst) const;
  /// All pairs with the given source, as a contiguous range.
  std::pair<std::vector<Pair>::const_iterator, std::vector<Pair>::const_iterator> image(
      const Tuple& src) const;

  /// Largest element index used, if any.
  std::optional<Element> max_element() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  std::vector<Pair> pairs_;
};

/// Applies r first, then s. Throws ArityMismatch.
Relation compose(const Relation& r, const Relation& s);

/// Monoidal product: arities add, pairs concatenate.
Relation tensor(const Relation& r, const Relation& s);

/// First pair (in canonical order) present in exactly one of the two relations.
struct RelationDiff {
  Pair pair;
  bool in_left = false;
};
std::optional<RelationDiff> first_difference(const Relation& lhs, const Relation& rhs);

}  // namespace irack
