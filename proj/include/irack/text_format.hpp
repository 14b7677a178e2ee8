#pragma once

// Line-oriented text formats for iracks, groups and relations.
//
// Irack:      elements: L...  /  plus: L...  /  minus: L...  /  rhd:  + k rows of k labels
// Group:      elements: L...  /  mult:  + k rows of k labels
// Relation:   arity: m -> n   then one "LHS | RHS" line per pair
// Lines starting with '#' and blank lines are ignored.

#include <string>
#include <string_view>

#include "irack/algebra.hpp"
#include "irack/relation.hpp"
#include "irack/tables.hpp"

namespace irack {

inline constexpr std::string_view kBuiltinExample = "builtin:example12";

RawIrack parse_irack(std::string_view text, const std::string& source = "<irack>");
GroupTable parse_group(std::string_view text, const std::string& source = "<group>");
Relation parse_relation(std::string_view text, const Carrier& carrier,
                        const std::string& source = "<relation>");

std::string format_irack(const IrackTable& irack);
std::string format_irack(const RawIrack& raw);
std::string format_relation(const Carrier& carrier, const Relation& r);

/// Reads a whole file; throws ParseError(path, 0, ...) if it cannot be opened.
std::string read_file(const std::string& path);

/// Resolves builtin:example12 or reads and validates an irack file.
IrackTable load_irack(const std::string& source);

}  // namespace irack
