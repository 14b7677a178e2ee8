#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irack/tables.hpp"
#include "irack/tuple.hpp"

namespace irack {

/// An argument or result of a law: a single element or a tuple.
using Value = std::variant<Element, Tuple>;

enum class Status { pass, fail };

struct LawResult {
  std::string law;
  Status status = Status::pass;
  /// Arguments of the first failing instance, in iteration order. Empty iff passing.
  std::vector<Value> witness;
  std::optional<Value> lhs;
  std::optional<Value> rhs;
  /// Free-form note for failures not expressible as lhs/rhs (e.g. relation mismatch).
  std::string detail;
  std::uint64_t checked = 0;
  bool exhaustive = true;

  bool operator==(const LawResult&) const = default;

  bool passed() const noexcept { return status == Status::pass; }
};

class CheckReport {
 public:
  std::vector<LawResult> entries;
  /// Seed of any pseudorandom sampling that contributed to the report.
  std::optional<std::uint64_t> seed;

  bool all_passed() const noexcept;
  const LawResult* find(std::string_view law) const noexcept;
  const LawResult& at(std::string_view law) const;

  /// Appends all entries of another report, prefixing law ids when given.
  void merge(const CheckReport& other, const std::string& prefix = {});

  bool operator==(const CheckReport&) const = default;
};

/// Accumulates one law's instances and keeps the first failure.
class LawTally {
 public:
  explicit LawTally(std::string law) { result_.law = std::move(law); }

  template <class Lhs, class Rhs>
  bool record(const Lhs& lhs, const Rhs& rhs, std::initializer_list<Value> witness) {
    ++result_.checked;
    if (lhs == rhs) return true;
    if (result_.passed()) {
      result_.status = Status::fail;
      result_.witness.assign(witness.begin(), witness.end());
      result_.lhs = Value(lhs);
      result_.rhs = Value(rhs);
    }
    return false;
  }

  /// Records a failure whose sides are not plain values.
  void fail(std::vector<Value> witness, std::string detail);
  void count(std::uint64_t n = 1) { result_.checked += n; }
  void set_sampled() { result_.exhaustive = false; }

  bool failed() const noexcept { return !result_.passed(); }
  LawResult take() && { return std::move(result_); }
  const LawResult& result() const noexcept { return result_; }

 private:
  LawResult result_;
};

std::string format_value(const Carrier& carrier, const Value& v);

/// "law: PASS (n checks)" / "law: FAIL at ... : lhs != rhs" lines.
std::string format_report(const Carrier& carrier, const CheckReport& report);

}  // namespace irack
