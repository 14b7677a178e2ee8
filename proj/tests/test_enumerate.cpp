#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "irack/algebra.hpp"
#include "irack/enumerate.hpp"
#include "irack/errors.hpp"

using namespace irack;
using testing_helpers::example;
using testing_helpers::str;
using testing_helpers::tup;

namespace {

// Every function {0..k-1} -> {0..k-1} as an image vector.
std::vector<std::vector<Element>> all_maps(std::size_t k) {
  std::vector<std::vector<Element>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= k;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Element> m(k);
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      m[i] = static_cast<Element>(c % k);
      c /= k;
    }
    out.push_back(m);
  }
  return out;
}

std::vector<std::vector<Element>> all_perms(std::size_t k) {
  std::vector<Element> p(k);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<std::vector<Element>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Brute force: rows from `rows`, plus/minus over every map, filtered by the checker.
std::set<std::vector<Element>> brute_force_iracks(std::size_t k, const std::vector<std::vector<Element>>& rows) {
  std::set<std::vector<Element>> found;
  const auto maps = all_maps(k);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Grid rhd;
    for (auto i : idx) rhd.push_back(rows[i]);
    for (const auto& plus : maps)
      for (const auto& minus : maps) {
        RawIrack raw{Carrier::numbered(k), rhd, plus, minus};
        if (check_irack_axioms(raw).all_passed()) {
          std::vector<Element> key = plus;
          key.insert(key.end(), minus.begin(), minus.end());
          for (const auto& row : rhd) key.insert(key.end(), row.begin(), row.end());
          found.insert(key);
        }
      }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == rows.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return found;
}

std::set<std::vector<Element>> keys(const EnumerationResult& r) {
  std::set<std::vector<Element>> out;
  for (const auto& t : r.iracks) {
    std::vector<Element> key = t.plus_map();
    key.insert(key.end(), t.minus_map().begin(), t.minus_map().end());
    for (Element a = 0; a < t.size(); ++a)
      for (Element b = 0; b < t.size(); ++b) key.push_back(t.rhd(a, b));
    out.insert(key);
  }
  return out;
}

}  // namespace

TEST(EnumerateIracks, OrderOne) {
  const auto r = enumerate_iracks(1, false);
  ASSERT_EQ(r.raw_count, 1u);
  ASSERT_EQ(r.iracks.size(), 1u);
  EXPECT_EQ(r.iracks[0].raw().rhd, trivial_irack().raw().rhd);
}

TEST(EnumerateIracks, OrderTwoContainsSwapStructure) {
  const auto r = enumerate_iracks(2, false);
  // trivial ▷, plus = minus = swap: IR(1) swap∘swap = id, IR(2) a▷a⁻ = a⁻ = a⁺, IR(3)-(6) trivial
  RawIrack swap{Carrier::numbered(2), {{0, 1}, {0, 1}}, {1, 0}, {1, 0}};
  ASSERT_TRUE(check_irack_axioms(swap).all_passed());
  bool found = false;
  for (const auto& t : r.iracks) found = found || t.raw().rhd == swap.rhd && t.plus_map() == swap.plus;
  EXPECT_TRUE(found);
}

TEST(EnumerateIracks, OrderTwoMatchesBruteForceOverAllFunctions) {
  const auto oracle = brute_force_iracks(2, all_maps(2));
  EXPECT_EQ(keys(enumerate_iracks(2, false)), oracle);
  EXPECT_EQ(oracle.size(), 2u);
}

TEST(EnumerateIracks, OrderThreeMatchesBruteForceOverPermutationRows) {
  const auto oracle = brute_force_iracks(3, all_perms(3));
  EXPECT_EQ(keys(enumerate_iracks(3, false)), oracle);
}

TEST(EnumerateIracks, FrozenCounts) {
  // Regression values produced by the search and cross-checked by brute force for k <= 3.
  const std::uint64_t raw[] = {1, 1, 2, 11, 80};
  const std::uint64_t canonical[] = {1, 1, 2, 5, 14};
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto r = enumerate_iracks(k, true);
    EXPECT_EQ(r.raw_count, raw[k]) << k;
    EXPECT_EQ(r.canonical_count, canonical[k]) << k;
    EXPECT_EQ(r.iracks.size(), canonical[k]);
    EXPECT_LE(r.canonical_count, r.raw_count);
  }
}

TEST(EnumerateIracks, EveryResultPassesChecker) {
  for (std::size_t k = 0; k <= 4; ++k)
    for (const auto& t : enumerate_iracks(k, false).iracks)
      ASSERT_TRUE(check_irack_axioms(t.raw()).all_passed());
}

TEST(EnumerateIracks, DeterministicAcrossThreads) {
  const auto a = enumerate_iracks(4, false, 1);
  const auto b = enumerate_iracks(4, false, 4);
  EXPECT_EQ(a.iracks, b.iracks);
}

TEST(EnumerateIracks, OrderLimit) {
  EXPECT_THROW(enumerate_iracks(5, false), OutOfRange);
  EXPECT_THROW(enumerate_racks(5, false), OutOfRange);
}

TEST(EnumerateRacks, FrozenCountsAndValidity) {
  // Up to relabelling these are the familiar 1, 1, 2, 6, 19.
  const std::uint64_t raw[] = {1, 1, 2, 13, 114};
  const std::uint64_t canonical[] = {1, 1, 2, 6, 19};
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto r = enumerate_racks(k, false);
    EXPECT_EQ(r.raw_count, raw[k]) << k;
    EXPECT_EQ(r.canonical_count, canonical[k]) << k;
    for (const auto& t : r.racks) ASSERT_TRUE(check_rack_axioms(t.raw()).all_passed());
  }
}

TEST(EnumerateRacks, EveryIrackInducesAnEnumeratedRack) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto racks = enumerate_racks(k, false).racks;
    for (const auto& ir : enumerate_iracks(k, false).iracks) {
      const RackTable r = rack_from_irack(ir);
      EXPECT_NE(std::find(racks.begin(), racks.end(), r), racks.end());
    }
  }
}

TEST(CanonicalForm, IdempotentAndRelabellingInvariant) {
  const IrackTable c = canonical_form(example());
  EXPECT_EQ(canonical_form(c), c);
  EXPECT_TRUE(check_irack_axioms(c.raw()).all_passed());
  EXPECT_EQ(canonical_form(dual_irack(dual_irack(example()))), c);

  // Relabel by reversing the element order.
  RawIrack raw = example().raw();
  RawIrack rev = raw;
  auto s = [](Element x) { return static_cast<Element>(6 - x); };
  for (Element a = 0; a < 7; ++a) {
    rev.plus[s(a)] = s(raw.plus[a]);
    rev.minus[s(a)] = s(raw.minus[a]);
    for (Element b = 0; b < 7; ++b) rev.rhd[s(a)][s(b)] = s(raw.rhd[a][b]);
  }
  EXPECT_EQ(canonical_form(IrackTable::validate(rev)), c);
}

TEST(CanonicalForm, StableValueForExample) {
  // Least plus map first: fixed point, a swap, then the 4-cycle in order.
  const IrackTable c = canonical_form(example());
  EXPECT_EQ(c.plus_map(), (std::vector<Element>{0, 2, 1, 4, 5, 6, 3}));
  EXPECT_EQ(c.minus_map(), (std::vector<Element>{0, 2, 1, 6, 3, 4, 5}));
  const std::vector<Element> id{0, 1, 2, 3, 4, 5, 6}, moved{0, 2, 1, 5, 6, 3, 4};
  for (Element a = 0; a < 7; ++a) EXPECT_EQ(c.raw().rhd[a], a < 3 ? id : moved) << a;
}

TEST(Saturate, SeedClosesToBeltProbe) {
  Relation seed(0, 3, {{Tuple{}, tup("acd")}});
  const auto result = saturate_to_tangled(seed, example());
  ASSERT_TRUE(std::holds_alternative<TangledRelation>(result));
  EXPECT_EQ(std::get<TangledRelation>(result).relation(),
            Relation(0, 3, {{Tuple{}, tup("acd")}, {Tuple{}, tup("bef")}}));
}

TEST(Saturate, AlreadyTangledIsFixed) {
  const Relation unit = eta(example());
  const auto result = saturate_to_tangled(unit, example());
  ASSERT_TRUE(std::holds_alternative<TangledRelation>(result));
  EXPECT_EQ(std::get<TangledRelation>(result).relation(), unit);
}

TEST(Saturate, TR2FailureWithWitness) {
  Relation seed(0, 1, {{Tuple{}, tup("c")}});
  const auto result = saturate_to_tangled(seed, example());
  ASSERT_TRUE(std::holds_alternative<SaturationFailure>(result));
  const auto& f = std::get<SaturationFailure>(result);
  ASSERT_EQ(f.witness.size(), 3u);
  EXPECT_EQ(std::get<Tuple>(f.witness[0]), Tuple{});
  EXPECT_EQ(std::get<Tuple>(f.witness[1]), tup("c"));
  // (c) ▷ a = b while () ▷ a = a
  EXPECT_EQ(std::get<Element>(f.witness[2]), testing_helpers::el('a'));
}

TEST(Saturate, SizeBound) {
  Relation seed(0, 1, {{Tuple{}, tup("c")}});
  const auto result = saturate_to_tangled(seed, example(), 1);
  ASSERT_TRUE(std::holds_alternative<SaturationFailure>(result));
  EXPECT_TRUE(std::get<SaturationFailure>(result).witness.empty());
}

TEST(Saturate, ResaturationIsNoOp) {
  Relation seed(1, 1, {{tup("c"), tup("c")}, {tup("a"), tup("a")}});
  const auto first = saturate_to_tangled(seed, example());
  ASSERT_TRUE(std::holds_alternative<TangledRelation>(first));
  const Relation closed = std::get<TangledRelation>(first);
  EXPECT_TRUE(is_tangled(closed, example()).all_passed());
  const auto second = saturate_to_tangled(closed, example());
  EXPECT_EQ(std::get<TangledRelation>(second).relation(), closed);
}
