#include "irack/check_report.hpp"

#include <algorithm>
#include <sstream>

#include "irack/errors.hpp"

namespace irack {

bool CheckReport::all_passed() const noexcept {
  return std::all_of(entries.begin(), entries.end(), [](const LawResult& e) { return e.passed(); });
}

const LawResult* CheckReport::find(std::string_view law) const noexcept {
  for (const auto& e : entries)
    if (e.law == law) return &e;
  return nullptr;
}

const LawResult& CheckReport::at(std::string_view law) const {
  if (const auto* e = find(law)) return *e;
  throw Error("no law '" + std::string(law) + "' in report");
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (auto e : other.entries) {
    e.law = prefix + e.law;
    entries.push_back(std::move(e));
  }
  if (other.seed) seed = other.seed;
}

void LawTally::fail(std::vector<Value> witness, std::string detail) {
  if (result_.passed()) {
    result_.status = Status::fail;
    result_.witness = std::move(witness);
    result_.detail = std::move(detail);
  }
}

std::string format_value(const Carrier& carrier, const Value& v) {
  if (const auto* e = std::get_if<Element>(&v)) return carrier.label(*e);
  return format_tuple(carrier, std::get<Tuple>(v));
}

std::string format_report(const Carrier& carrier, const CheckReport& report) {
  std::ostringstream os;
  for (const auto& e : report.entries) {
    os << e.law << ": " << (e.passed() ? "PASS" : "FAIL") << " (" << e.checked
       << (e.exhaustive ? " checks" : " sampled checks") << ")";
    if (!e.passed()) {
      os << " at";
      for (const auto& w : e.witness) os << ' ' << format_value(carrier, w);
      if (e.lhs && e.rhs)
        os << " : " << format_value(carrier, *e.lhs) << " != " << format_value(carrier, *e.rhs);
      if (!e.detail.empty()) os << " : " << e.detail;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace irack
