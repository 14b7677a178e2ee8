#pragma once

// Law checks for the rack (and candidate irack) structure on tuples.

#include <cstddef>
#include <cstdint>

#include "irack/check_report.hpp"
#include "irack/tables.hpp"

namespace irack {

struct TupleCheckOptions {
  std::size_t max_arity = 2;
  /// Arity combinations with at most this many instances are checked exhaustively;
  /// larger ones are sampled with exactly this many instances.
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// R(1)..R(4) on tuples of every mixed arity combination up to max_arity, with
/// ◁ derived from the irack. Ids "R(1)".."R(4)".
CheckReport check_tuple_rack(const IrackTable& irack, const TupleCheckOptions& options);

/// IR(1)..IR(6) on tuples with the reversing unary maps, exhaustive up to max_arity.
/// IR(2) is expected to fail in general; the report carries the first witness.
CheckReport check_tuple_irack(const IrackTable& irack, std::size_t max_arity);

}  // namespace irack
