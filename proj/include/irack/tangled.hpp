#pragma once

// The category of tangled relations over an irack: membership, braiding,
// and the self-duality of the generating object.

#include <cstddef>
#include <string>
#include <vector>

#include "irack/check_report.hpp"
#include "irack/relation.hpp"
#include "irack/tables.hpp"

namespace irack {

/// TR(1): (c▷a, c▷b) is a pair for every pair (a,b) and element c.
/// TR(2): a▷c = b▷c for every pair (a,b) and element c.
/// Witnesses are (a, b, c). Throws OutOfRange if r mentions elements outside the carrier.
CheckReport is_tangled(const Relation& r, const IrackTable& irack);

class TangledRelation {
 public:
  /// Throws AxiomViolation when r is not tangled over the irack.
  static TangledRelation certify(Relation r, const IrackTable& irack);

  const Relation& relation() const noexcept { return rel_; }
  operator const Relation&() const noexcept { return rel_; }

  bool operator==(const TangledRelation&) const = default;

 private:
  friend TangledRelation trusted_tangled(Relation r);
  explicit TangledRelation(Relation r) : rel_(std::move(r)) {}
  Relation rel_;
};

/// tw_{m,n}: (a, b) ↦ (a▷b, a), A^{m+n} → A^{n+m}. Throws CapExceeded.
TangledRelation braiding(std::size_t m, std::size_t n, const IrackTable& irack);

/// Inverse of tw_{m,n}: (b, a) ↦ (a, b◁a), A^{n+m} → A^{m+n}. Throws CapExceeded.
TangledRelation braiding_inverse(std::size_t m, std::size_t n, const IrackTable& irack);

/// A named tangled relation used as a naturality probe.
struct Probe {
  std::string name;
  Relation relation;
};

/// Tangledness and invertibility of tw_{m,n}, both coherence identities and
/// Yang–Baxter at (m,n,p), and naturality of tw against each probe at arity p.
CheckReport check_braiding(const IrackTable& irack, std::size_t m, std::size_t n, std::size_t p,
                           const std::vector<Probe>& probes = {});

/// η: () ↦ (a, a⁻)
TangledRelation eta(const IrackTable& irack);
/// ε: (a, a⁺) ↦ ()
TangledRelation epsilon(const IrackTable& irack);

/// Both snake equations and commutativity of η, ε with tw_{1,1}.
CheckReport check_tangle_algebra(const IrackTable& irack);

/// Relation equality as a law entry; the witness is the first differing pair.
LawResult relation_law(std::string law, const Relation& lhs, const Relation& rhs);

}  // namespace irack
