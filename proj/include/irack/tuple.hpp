#pragma once

// Tuples of carrier elements and their rack actions.
//
// For a tuple a = (a1, ..., an) and an element b:
//   a ▷ b = a1 ▷ (a2 ▷ (... (an ▷ b)))      () ▷ b = b
//   b ◁ a = ((b ◁ a1) ◁ a2) ... ◁ an        b ◁ () = b
// and tuples act on tuples componentwise.

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "irack/tables.hpp"

namespace irack {

class Tuple {
 public:
  Tuple() = default;
  Tuple(std::initializer_list<Element> elems) : elems_(elems) {}
  explicit Tuple(std::vector<Element> elems) : elems_(std::move(elems)) {}

  std::size_t arity() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Element operator[](std::size_t i) const { return elems_[i]; }
  std::span<const Element> elems() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Sub-tuple [first, first + count).
  Tuple slice(std::size_t first, std::size_t count) const;

  friend Tuple concat(const Tuple& lhs, const Tuple& rhs);

  auto operator<=>(const Tuple&) const = default;
  bool operator==(const Tuple&) const = default;

 private:
  std::vector<Element> elems_;
};

Tuple concat(const Tuple& lhs, const Tuple& rhs);

/// Anything offering ▷ and ◁ on element indices.
template <class T>
concept RackLike = requires(const T& t, Element x) {
  { t.size() } -> std::convertible_to<std::size_t>;
  { t.rhd(x, x) } -> std::convertible_to<Element>;
  { t.lhd(x, x) } -> std::convertible_to<Element>;
};

template <RackLike R>
Element act(const R& rack, const Tuple& a, Element b) {
  for (auto it = a.elems().rbegin(); it != a.elems().rend(); ++it) b = rack.rhd(*it, b);
  return b;
}

template <RackLike R>
Element act(const R& rack, Element b, const Tuple& a) {
  for (Element x : a) b = rack.lhd(b, x);
  return b;
}

template <RackLike R>
Tuple act(const R& rack, const Tuple& a, const Tuple& b) {
  std::vector<Element> out;
  out.reserve(b.arity());
  for (Element x : b) out.push_back(act(rack, a, x));
  return Tuple(std::move(out));
}

/// a ▷ b for tuples.
template <RackLike R>
Tuple tuple_rhd(const R& rack, const Tuple& a, const Tuple& b) {
  return act(rack, a, b);
}

/// b ◁ a for tuples.
template <RackLike R>
Tuple tuple_lhd(const R& rack, const Tuple& b, const Tuple& a) {
  std::vector<Element> out;
  out.reserve(b.arity());
  for (Element x : b) out.push_back(act(rack, x, a));
  return Tuple(std::move(out));
}

/// c ▷ t for a single element c, applied componentwise.
template <RackLike R>
Tuple diagonal(const R& rack, Element c, const Tuple& t) {
  std::vector<Element> out;
  out.reserve(t.arity());
  for (Element x : t) out.push_back(rack.rhd(c, x));
  return Tuple(std::move(out));
}

/// (a1..an)⁻ = (an⁻, ..., a1⁻)
Tuple tuple_minus(const IrackTable& irack, const Tuple& a);
/// (a1..an)⁺ = (an⁺, ..., a1⁺)
Tuple tuple_plus(const IrackTable& irack, const Tuple& a);

/// Renders "(a,c,d)" using carrier labels.
std::string format_tuple(const Carrier& carrier, const Tuple& t);

/// Parses a tuple literal such as "(a, c,d)" or "()". Throws ParseError.
Tuple parse_tuple(const Carrier& carrier, std::string_view text, const std::string& source = "<tuple>",
                  std::size_t line = 0);

/// Number of tuples of the given arity over k elements, saturating at SIZE_MAX.
std::size_t tuple_count(std::size_t k, std::size_t arity);

/// The i-th tuple of the given arity in lexicographic order (big-endian base k).
Tuple tuple_at(std::size_t k, std::size_t arity, std::size_t index);

/// Every tuple of the given arity in lexicographic order.
std::vector<Tuple> all_tuples(std::size_t k, std::size_t arity);

}  // namespace irack
