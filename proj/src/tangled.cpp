#include "irack/tangled.hpp"

#include <algorithm>

#include "irack/errors.hpp"
#include "irack/tuple.hpp"

namespace irack {

TangledRelation trusted_tangled(Relation r) { return TangledRelation(std::move(r)); }

CheckReport is_tangled(const Relation& r, const IrackTable& irack) {
  const std::size_t k = irack.size();
  if (auto top = r.max_element(); top && *top >= k) {
    throw OutOfRange("relation mentions element " + std::to_string(*top) + " outside a carrier of size " +
                     std::to_string(k));
  }
  LawTally tr1("TR(1)");
  LawTally tr2("TR(2)");
  for (const auto& [a, b] : r.pairs()) {
    for (Element c = 0; c < k; ++c) {
      tr1.count();
      if (!tr1.failed() && !r.contains(diagonal(irack, c, a), diagonal(irack, c, b)))
        tr1.fail({a, b, c}, "(c▷a, c▷b) is not a pair");
      tr2.record(act(irack, a, c), act(irack, b, c), {a, b, c});
    }
  }
  CheckReport report;
  report.entries.push_back(std::move(tr1).take());
  report.entries.push_back(std::move(tr2).take());
  return report;
}

TangledRelation TangledRelation::certify(Relation r, const IrackTable& irack) {
  auto report = is_tangled(r, irack);
  for (const auto& e : report.entries)
    if (!e.passed()) throw AxiomViolation("relation is not tangled: " + e.law + " fails");
  return TangledRelation(std::move(r));
}

namespace {

std::vector<Tuple> domain(std::size_t k, std::size_t arity) {
  if (tuple_count(k, arity) > kMaterializationCap) {
    throw CapExceeded("A^" + std::to_string(arity) + " over " + std::to_string(k) +
                      " elements exceeds the materialization cap; evaluate braids pointwise "
                      "with apply_braid instead");
  }
  return all_tuples(k, arity);
}

}  // namespace

TangledRelation braiding(std::size_t m, std::size_t n, const IrackTable& irack) {
  std::vector<Pair> pairs;
  for (auto& t : domain(irack.size(), m + n)) {
    Tuple a = t.slice(0, m);
    Tuple b = t.slice(m, n);
    Tuple image = concat(tuple_rhd(irack, a, b), a);
    pairs.emplace_back(std::move(t), std::move(image));
  }
  return trusted_tangled(Relation(m + n, n + m, std::move(pairs)));
}

TangledRelation braiding_inverse(std::size_t m, std::size_t n, const IrackTable& irack) {
  std::vector<Pair> pairs;
  for (auto& t : domain(irack.size(), n + m)) {
    Tuple x = t.slice(0, n);
    Tuple y = t.slice(n, m);
    Tuple image = concat(y, tuple_lhd(irack, x, y));
    pairs.emplace_back(std::move(t), std::move(image));
  }
  return trusted_tangled(Relation(n + m, m + n, std::move(pairs)));
}

LawResult relation_law(std::string law, const Relation& lhs, const Relation& rhs) {
  LawTally tally(std::move(law));
  tally.count(std::max(lhs.size(), rhs.size()));
  if (lhs.src_arity() != rhs.src_arity() || lhs.dst_arity() != rhs.dst_arity()) {
    tally.fail({}, "arities differ");
  } else if (auto diff = first_difference(lhs, rhs)) {
    tally.fail({diff->pair.first, diff->pair.second},
               diff->in_left ? "pair only on the left side" : "pair only on the right side");
  }
  return std::move(tally).take();
}

CheckReport check_braiding(const IrackTable& irack, std::size_t m, std::size_t n, std::size_t p,
                           const std::vector<Probe>& probes) {
  const std::size_t k = irack.size();
  auto id = [&](std::size_t arity) { return Relation::identity(k, arity); };
  auto tw = [&](std::size_t x, std::size_t y) { return braiding(x, y, irack).relation(); };

  CheckReport report;
  const Relation fwd = tw(m, n);
  const Relation inv = braiding_inverse(m, n, irack).relation();
  report.merge(is_tangled(fwd, irack), "tw ");
  report.merge(is_tangled(inv, irack), "tw^-1 ");
  report.entries.push_back(relation_law("inverse-left", compose(fwd, inv), id(m + n)));
  report.entries.push_back(relation_law("inverse-right", compose(inv, fwd), id(n + m)));

  // (a,b,c) ↦ (a, b▷c, b) ↦ (a▷(b▷c), a, b)
  report.entries.push_back(relation_law(
      "coherence-1", tw(m + n, p), compose(tensor(id(m), tw(n, p)), tensor(tw(m, p), id(n)))));
  // (a,b,c) ↦ (a▷b, a, c) ↦ (a▷b, a▷c, a)
  report.entries.push_back(relation_law(
      "coherence-2", tw(m, n + p), compose(tensor(tw(m, n), id(p)), tensor(id(n), tw(m, p)))));

  const Relation yb_left =
      compose(compose(tensor(tw(m, n), id(p)), tensor(id(n), tw(m, p))), tensor(tw(n, p), id(m)));
  const Relation yb_right =
      compose(compose(tensor(id(m), tw(n, p)), tensor(tw(m, p), id(n))), tensor(id(p), tw(m, n)));
  report.entries.push_back(relation_law("yang-baxter", yb_left, yb_right));

  for (const auto& probe : probes) {
    const Relation& r = probe.relation;
    const std::size_t src = r.src_arity();
    const std::size_t dst = r.dst_arity();
    report.entries.push_back(relation_law("naturality-1[" + probe.name + "]",
                                          compose(tensor(r, id(p)), tw(dst, p)),
                                          compose(tw(src, p), tensor(id(p), r))));
    report.entries.push_back(relation_law("naturality-2[" + probe.name + "]",
                                          compose(tensor(id(p), r), tw(p, dst)),
                                          compose(tw(p, src), tensor(r, id(p)))));
  }
  return report;
}

TangledRelation eta(const IrackTable& irack) {
  std::vector<Pair> pairs;
  for (Element a = 0; a < irack.size(); ++a) pairs.emplace_back(Tuple{}, Tuple{a, irack.minus(a)});
  return TangledRelation::certify(Relation(0, 2, std::move(pairs)), irack);
}

TangledRelation epsilon(const IrackTable& irack) {
  std::vector<Pair> pairs;
  for (Element a = 0; a < irack.size(); ++a) pairs.emplace_back(Tuple{a, irack.plus(a)}, Tuple{});
  return TangledRelation::certify(Relation(2, 0, std::move(pairs)), irack);
}

CheckReport check_tangle_algebra(const IrackTable& irack) {
  const Relation id1 = Relation::identity(irack.size(), 1);
  const Relation unit = eta(irack);
  const Relation counit = epsilon(irack);
  const Relation tw = braiding(1, 1, irack);

  CheckReport report;
  report.entries.push_back(
      relation_law("snake-1", compose(tensor(id1, unit), tensor(counit, id1)), id1));
  report.entries.push_back(
      relation_law("snake-2", compose(tensor(unit, id1), tensor(id1, counit)), id1));
  report.entries.push_back(relation_law("commute-eta", compose(unit, tw), unit));
  report.entries.push_back(relation_law("commute-epsilon", compose(tw, counit), counit));
  return report;
}

}  // namespace irack
