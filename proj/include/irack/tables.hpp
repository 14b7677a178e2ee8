#pragma once

// Finite racks and iracks as operation tables over a labelled carrier.
//
// Elements are dense indices 0..k-1. Raw tables are plain data handed to the
// checkers; RackTable and IrackTable can only be obtained through validation
// and are immutable afterwards.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace irack {

using Element = std::uint32_t;

class Carrier {
 public:
  Carrier() = default;
  /// Throws MalformedTable on duplicate or ill-formed labels.
  explicit Carrier(std::vector<std::string> labels);

  /// Carrier labelled "0", "1", ..., "k-1".
  static Carrier numbered(std::size_t k);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(Element e) const { return labels_.at(e); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  static bool valid_label(std::string_view label);

  bool operator==(const Carrier&) const = default;

 private:
  std::vector<std::string> labels_;
};

using Grid = std::vector<std::vector<Element>>;

/// Unvalidated rack input: rhd[a][b] = a ▷ b, lhd[b][a] = b ◁ a.
struct RawRack {
  Carrier carrier;
  Grid rhd;
  Grid lhd;
};

/// Unvalidated irack input: rhd[a][b] = a ▷ b, plus[a] = a⁺, minus[a] = a⁻.
struct RawIrack {
  Carrier carrier;
  Grid rhd;
  std::vector<Element> plus;
  std::vector<Element> minus;
};

/// Throws MalformedTable naming the first offending cell.
void check_well_formed(const RawRack& raw);
void check_well_formed(const RawIrack& raw);

class RackTable {
 public:
  /// Runs the exhaustive rack-axiom check; throws AxiomViolation on failure.
  static RackTable validate(const RawRack& raw);

  std::size_t size() const noexcept { return carrier_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }

  Element rhd(Element a, Element b) const noexcept { return rhd_[a * size() + b]; }
  Element lhd(Element b, Element a) const noexcept { return lhd_[b * size() + a]; }

  RawRack raw() const;

  bool operator==(const RackTable&) const = default;

 private:
  friend RackTable assume_valid(RawRack raw);
  RackTable(Carrier carrier, std::vector<Element> rhd, std::vector<Element> lhd)
      : carrier_(std::move(carrier)), rhd_(std::move(rhd)), lhd_(std::move(lhd)) {}

  Carrier carrier_;
  std::vector<Element> rhd_;
  std::vector<Element> lhd_;
};

class IrackTable {
 public:
  /// Runs the exhaustive irack-axiom check; throws AxiomViolation on failure.
  static IrackTable validate(const RawIrack& raw);

  std::size_t size() const noexcept { return carrier_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }

  Element rhd(Element a, Element b) const noexcept { return rhd_[a * size() + b]; }
  Element plus(Element a) const noexcept { return plus_[a]; }
  Element minus(Element a) const noexcept { return minus_[a]; }
  /// The derived right action b ◁ a := a⁻ ▷ b.
  Element lhd(Element b, Element a) const noexcept { return rhd(minus(a), b); }

  const std::vector<Element>& plus_map() const noexcept { return plus_; }
  const std::vector<Element>& minus_map() const noexcept { return minus_; }

  RawIrack raw() const;

  bool operator==(const IrackTable&) const = default;

 private:
  friend IrackTable assume_valid(RawIrack raw);
  IrackTable(Carrier carrier, std::vector<Element> rhd, std::vector<Element> plus,
             std::vector<Element> minus)
      : carrier_(std::move(carrier)),
        rhd_(std::move(rhd)),
        plus_(std::move(plus)),
        minus_(std::move(minus)) {}

  Carrier carrier_;
  std::vector<Element> rhd_;
  std::vector<Element> plus_;
  std::vector<Element> minus_;
};

/// Wraps a table already known to satisfy its axioms (derived by a law-preserving
/// construction). Only shape is checked.
RackTable assume_valid(RawRack raw);
IrackTable assume_valid(RawIrack raw);

}  // namespace irack
