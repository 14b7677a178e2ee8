#pragma once

// Exhaustive law checking for racks and iracks, plus the standard constructions.

#include "irack/check_report.hpp"
#include "irack/tables.hpp"

namespace irack {

/// R(1)..R(4) over all pairs/triples, lexicographic order. Throws MalformedTable.
CheckReport check_rack_axioms(const RawRack& raw);

/// IR(1)..IR(6); IR(1)/IR(2) over elements, the rest over pairs/triples. Throws MalformedTable.
CheckReport check_irack_axioms(const RawIrack& raw);

/// The ten elementary consequences of the irack axioms, ids "L1.1".."L1.10".
/// The raw overload is for diagnosing tables that may not be iracks.
CheckReport check_lemmas(const IrackTable& irack);
CheckReport check_lemmas(const RawIrack& raw);

/// Same ▷, with b ◁ a = a⁻ ▷ b.
RackTable rack_from_irack(const IrackTable& irack);

/// Swaps the two unary operations.
IrackTable dual_irack(const IrackTable& irack);

/// Group table input; mult[g][h] = g·h.
struct GroupTable {
  Carrier carrier;
  Grid mult;
};

/// Conjugation irack g ▷ h = g h g⁻¹, g⁺ = g⁻ = g⁻¹. Throws NotAGroup / MalformedTable.
IrackTable irack_from_group(const GroupTable& group);

/// The seven-element irack on {1,a,b,c,d,e,f}.
IrackTable builtin_example_irack();

/// One-element irack, label "e".
IrackTable trivial_irack();

}  // namespace irack
