#pragma once

// Brute-force search for all small iracks and racks, canonical forms under
// relabelling, and closure of a seed relation to a tangled one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irack/check_report.hpp"
#include "irack/relation.hpp"
#include "irack/tables.hpp"
#include "irack/tangled.hpp"

namespace irack {

inline constexpr std::size_t kMaxEnumerationOrder = 4;

struct EnumerationResult {
  std::size_t order = 0;
  std::uint64_t raw_count = 0;
  std::uint64_t canonical_count = 0;
  /// Raw structures when dedup is off, one representative (canonical form) per class otherwise.
  std::vector<IrackTable> iracks;
  std::vector<RackTable> racks;
};

/// All iracks on {0..k-1}; deterministic order. Throws OutOfRange for k > 4.
EnumerationResult enumerate_iracks(std::size_t k, bool dedup, unsigned threads = 1);

/// All racks on {0..k-1}. Throws OutOfRange for k > 4.
EnumerationResult enumerate_racks(std::size_t k, bool dedup, unsigned threads = 1);

/// Lexicographically least (plus, minus, rhd) under relabelling; carrier becomes numbered.
IrackTable canonical_form(const IrackTable& irack);
RackTable canonical_form(const RackTable& rack);

struct SaturationFailure {
  std::string reason;
  /// (a, b, c) for a TR(2) violation; empty when the size bound was hit.
  std::vector<Value> witness;
};

using SaturationResult = std::variant<TangledRelation, SaturationFailure>;

/// Closes seed under the diagonal actions c▷– for all c, then checks TR(2).
SaturationResult saturate_to_tangled(const Relation& seed, const IrackTable& irack,
                                     std::size_t max_pairs = kMaterializationCap);

}  // namespace irack
