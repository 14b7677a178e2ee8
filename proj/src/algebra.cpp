#include "irack/algebra.hpp"

#include <optional>

#include "irack/errors.hpp"

namespace irack {

namespace {

// Iteration helpers over {0..k-1}^n in lexicographic order.
template <class Fn>
void for_each_element(std::size_t k, Fn fn) {
  for (Element a = 0; a < k; ++a) fn(a);
}

template <class Fn>
void for_each_pair(std::size_t k, Fn fn) {
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) fn(a, b);
}

template <class Fn>
void for_each_triple(std::size_t k, Fn fn) {
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      for (Element c = 0; c < k; ++c) fn(a, b, c);
}

CheckReport collect(std::vector<LawTally>& tallies) {
  CheckReport report;
  for (auto& t : tallies) report.entries.push_back(std::move(t).take());
  return report;
}

}  // namespace

CheckReport check_rack_axioms(const RawRack& raw) {
  check_well_formed(raw);
  const std::size_t k = raw.carrier.size();
  auto r = [&](Element a, Element b) { return raw.rhd[a][b]; };
  auto l = [&](Element b, Element a) { return raw.lhd[b][a]; };

  std::vector<LawTally> t{LawTally("R(1)"), LawTally("R(2)"), LawTally("R(3)"), LawTally("R(4)")};
  for_each_pair(k, [&](Element a, Element b) {
    t[0].record(l(r(a, b), a), b, {a, b});
    t[1].record(r(a, l(b, a)), b, {a, b});
  });
  for_each_triple(k, [&](Element a, Element b, Element c) {
    t[2].record(r(a, r(b, c)), r(r(a, b), r(a, c)), {a, b, c});
    t[3].record(l(l(c, b), a), l(l(c, a), l(b, a)), {a, b, c});
  });
  return collect(t);
}

CheckReport check_irack_axioms(const RawIrack& raw) {
  check_well_formed(raw);
  const std::size_t k = raw.carrier.size();
  auto r = [&](Element a, Element b) { return raw.rhd[a][b]; };
  auto p = [&](Element a) { return raw.plus[a]; };
  auto m = [&](Element a) { return raw.minus[a]; };

  std::vector<LawTally> t{LawTally("IR(1)"), LawTally("IR(2)"), LawTally("IR(3)"),
                          LawTally("IR(4)"), LawTally("IR(5)"), LawTally("IR(6)")};
  for_each_element(k, [&](Element a) {
    if (t[0].record(m(p(a)), a, {a})) t[0].record(p(m(a)), a, {a});
    t[1].record(r(a, m(a)), p(a), {a});
  });
  for_each_pair(k, [&](Element a, Element b) {
    t[2].record(r(m(a), r(a, b)), b, {a, b});
    t[3].record(r(a, r(m(a), b)), b, {a, b});
    t[5].record(r(a, m(b)), m(r(a, b)), {a, b});
  });
  for_each_triple(k, [&](Element a, Element b, Element c) {
    t[4].record(r(a, r(b, c)), r(r(a, b), r(a, c)), {a, b, c});
  });
  return collect(t);
}

CheckReport check_lemmas(const RawIrack& raw) {
  check_well_formed(raw);
  const std::size_t k = raw.carrier.size();
  auto r = [&](Element a, Element b) { return raw.rhd[a][b]; };
  auto p = [&](Element a) { return raw.plus[a]; };
  auto m = [&](Element a) { return raw.minus[a]; };

  std::vector<LawTally> t;
  for (int i = 1; i <= 10; ++i) t.emplace_back("L1." + std::to_string(i));

  for_each_element(k, [&](Element a) {
    t[0].record(r(a, a), p(p(a)), {a});
    t[1].record(r(m(a), a), p(p(a)), {a});
    t[2].record(p(p(p(p(a)))), a, {a});
    t[3].record(r(m(m(a)), a), p(p(a)), {a});
    t[5].record(r(a, p(a)), m(a), {a});
  });
  for_each_pair(k, [&](Element a, Element b) {
    t[4].record(p(r(a, b)), r(a, p(b)), {a, b});
    t[6].record(r(p(a), r(a, b)), b, {a, b});
    t[7].record(r(a, r(p(a), b)), b, {a, b});
    // x ↦ a▷x and x ↦ a⁻▷x are mutually inverse.
    if (t[8].record(r(a, r(m(a), b)), b, {a, b})) t[8].record(r(m(a), r(a, b)), b, {a, b});
    t[9].record(r(p(a), b), r(m(a), b), {a, b});
  });
  return collect(t);
}

CheckReport check_lemmas(const IrackTable& irack) { return check_lemmas(irack.raw()); }

RackTable rack_from_irack(const IrackTable& irack) {
  RawRack raw;
  raw.carrier = irack.carrier();
  const std::size_t k = irack.size();
  raw.rhd.assign(k, std::vector<Element>(k));
  raw.lhd.assign(k, std::vector<Element>(k));
  for_each_pair(k, [&](Element a, Element b) {
    raw.rhd[a][b] = irack.rhd(a, b);
    raw.lhd[b][a] = irack.rhd(irack.minus(a), b);
  });
  return assume_valid(std::move(raw));
}

IrackTable dual_irack(const IrackTable& irack) {
  RawIrack raw = irack.raw();
  std::swap(raw.plus, raw.minus);
  return assume_valid(std::move(raw));
}

IrackTable irack_from_group(const GroupTable& group) {
  const std::size_t k = group.carrier.size();
  if (group.mult.size() != k) throw MalformedTable("mult has wrong number of rows");
  for (std::size_t i = 0; i < k; ++i) {
    if (group.mult[i].size() != k)
      throw MalformedTable("mult row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < k; ++j)
      if (group.mult[i][j] >= k)
        throw MalformedTable("mult[" + std::to_string(i) + "][" + std::to_string(j) +
                             "] is out of range");
  }
  auto mul = [&](Element g, Element h) { return group.mult[g][h]; };
  const auto& L = group.carrier;

  for_each_triple(k, [&](Element a, Element b, Element c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw NotAGroup("associativity fails at (" + L.label(a) + "," + L.label(b) + "," +
                      L.label(c) + ")");
  });

  std::optional<Element> unit;
  for (Element e = 0; e < k && !unit; ++e) {
    bool ok = true;
    for (Element g = 0; g < k && ok; ++g) ok = mul(e, g) == g && mul(g, e) == g;
    if (ok) unit = e;
  }
  if (!unit) throw NotAGroup("identity: no two-sided identity element");

  std::vector<Element> inv(k);
  for (Element g = 0; g < k; ++g) {
    std::optional<Element> found;
    for (Element h = 0; h < k && !found; ++h)
      if (mul(g, h) == *unit && mul(h, g) == *unit) found = h;
    if (!found) throw NotAGroup("inverses: " + L.label(g) + " has no inverse");
    inv[g] = *found;
  }

  RawIrack raw;
  raw.carrier = group.carrier;
  raw.rhd.assign(k, std::vector<Element>(k));
  for_each_pair(k, [&](Element g, Element h) { raw.rhd[g][h] = mul(mul(g, h), inv[g]); });
  raw.plus = inv;
  raw.minus = inv;
  return IrackTable::validate(raw);
}

IrackTable builtin_example_irack() {
  // Elements 1 a b c d e f = 0..6.
  const std::vector<Element> identity_row{0, 1, 2, 3, 4, 5, 6};
  const std::vector<Element> swap_row{0, 2, 1, 5, 6, 3, 4};
  RawIrack raw;
  raw.carrier = Carrier({"1", "a", "b", "c", "d", "e", "f"});
  raw.plus = {0, 2, 1, 6, 3, 4, 5};
  raw.minus = {0, 2, 1, 4, 5, 6, 3};
  raw.rhd = {identity_row, identity_row, identity_row, swap_row, swap_row, swap_row, swap_row};
  return IrackTable::validate(raw);
}

IrackTable trivial_irack() {
  RawIrack raw;
  raw.carrier = Carrier({"e"});
  raw.rhd = {{0}};
  raw.plus = {0};
  raw.minus = {0};
  return IrackTable::validate(raw);
}

}  // namespace irack
