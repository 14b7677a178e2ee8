#pragma once

#include <string>
#include <string_view>

#include "irack/algebra.hpp"
#include "irack/tuple.hpp"

namespace testing_helpers {

inline const irack::IrackTable& example() {
  static const irack::IrackTable table = irack::builtin_example_irack();
  return table;
}

/// Element of the built-in irack by its one-character label.
inline irack::Element el(char label) { return *example().carrier().find(std::string(1, label)); }

/// Tuple of the built-in irack spelled as a label string, e.g. "acd".
inline irack::Tuple tup(std::string_view labels) {
  std::vector<irack::Element> out;
  for (char c : labels) out.push_back(el(c));
  return irack::Tuple(std::move(out));
}

/// Inverse of tup().
inline std::string str(const irack::Tuple& t) {
  std::string out;
  for (auto e : t) out += example().carrier().label(e);
  return out;
}

}  // namespace testing_helpers
