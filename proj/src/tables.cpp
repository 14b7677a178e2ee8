#include "irack/tables.hpp"

#include <algorithm>
#include <set>

#include "irack/algebra.hpp"
#include "irack/errors.hpp"

namespace irack {

bool Carrier::valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f' ||
           ch == ',' || ch == '|' || ch == '(' || ch == ')';
  });
}

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!valid_label(l)) throw MalformedTable("invalid element label '" + l + "'");
    if (!seen.insert(l).second) throw MalformedTable("duplicate element label '" + l + "'");
  }
}

Carrier Carrier::numbered(std::size_t k) {
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return Carrier(std::move(labels));
}

std::optional<Element> Carrier::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

namespace {

void check_grid(const Grid& grid, std::size_t k, const char* name) {
  if (grid.size() != k) {
    throw MalformedTable(std::string(name) + " has " + std::to_string(grid.size()) +
                         " rows, expected " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (grid[i].size() != k) {
      throw MalformedTable(std::string(name) + " row " + std::to_string(i) + " has " +
                           std::to_string(grid[i].size()) + " entries, expected " +
                           std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (grid[i][j] >= k) {
        throw MalformedTable(std::string(name) + "[" + std::to_string(i) + "][" +
                             std::to_string(j) + "] = " + std::to_string(grid[i][j]) +
                             " is out of range");
      }
    }
  }
}

void check_map(const std::vector<Element>& map, std::size_t k, const char* name) {
  if (map.size() != k) {
    throw MalformedTable(std::string(name) + " has " + std::to_string(map.size()) +
                         " entries, expected " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (map[i] >= k) {
      throw MalformedTable(std::string(name) + "[" + std::to_string(i) + "] = " +
                           std::to_string(map[i]) + " is out of range");
    }
  }
}

std::vector<Element> flatten(const Grid& grid) {
  std::vector<Element> out;
  for (const auto& row : grid) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Grid unflatten(const std::vector<Element>& flat, std::size_t k) {
  Grid grid(k);
  for (std::size_t i = 0; i < k; ++i) grid[i].assign(flat.begin() + i * k, flat.begin() + (i + 1) * k);
  return grid;
}

std::string first_failure(const CheckReport& report) {
  for (const auto& e : report.entries)
    if (!e.passed()) return e.law;
  return {};
}

}  // namespace

void check_well_formed(const RawRack& raw) {
  check_grid(raw.rhd, raw.carrier.size(), "rhd");
  check_grid(raw.lhd, raw.carrier.size(), "lhd");
}

void check_well_formed(const RawIrack& raw) {
  check_grid(raw.rhd, raw.carrier.size(), "rhd");
  check_map(raw.plus, raw.carrier.size(), "plus");
  check_map(raw.minus, raw.carrier.size(), "minus");
}

RackTable assume_valid(RawRack raw) {
  check_well_formed(raw);
  return RackTable(std::move(raw.carrier), flatten(raw.rhd), flatten(raw.lhd));
}

IrackTable assume_valid(RawIrack raw) {
  check_well_formed(raw);
  return IrackTable(std::move(raw.carrier), flatten(raw.rhd), std::move(raw.plus),
                    std::move(raw.minus));
}

RackTable RackTable::validate(const RawRack& raw) {
  auto report = check_rack_axioms(raw);
  if (!report.all_passed()) throw AxiomViolation("not a rack: " + first_failure(report) + " fails");
  return assume_valid(raw);
}

IrackTable IrackTable::validate(const RawIrack& raw) {
  auto report = check_irack_axioms(raw);
  if (!report.all_passed()) throw AxiomViolation("not an irack: " + first_failure(report) + " fails");
  return assume_valid(raw);
}

RawRack RackTable::raw() const {
  return RawRack{carrier_, unflatten(rhd_, size()), unflatten(lhd_, size())};
}

RawIrack IrackTable::raw() const {
  return RawIrack{carrier_, unflatten(rhd_, size()), plus_, minus_};
}

}  // namespace irack
