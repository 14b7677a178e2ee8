#include <gtest/gtest.h>

#include "helpers.hpp"
#include "irack/braid.hpp"
#include "irack/errors.hpp"
#include "irack/groups.hpp"
#include "oracle.hpp"

using namespace irack;
using testing_helpers::example;
using testing_helpers::str;
using testing_helpers::tup;

TEST(ParseBraid, Words) {
  const BraidWord w = parse_braid("s1 s2 s1", 3);
  ASSERT_EQ(w.length(), 3u);
  for (const auto& l : w.letters()) EXPECT_TRUE(l.positive);
  EXPECT_EQ(w.letters()[1].generator, 2u);

  const BraidWord inv = parse_braid("s1^-1", 2);
  ASSERT_EQ(inv.length(), 1u);
  EXPECT_FALSE(inv.letters()[0].positive);

  EXPECT_EQ(parse_braid("", 4).length(), 0u);
  EXPECT_EQ(format_braid(parse_braid("  s2^-1   s1 ", 3)), "s2^-1 s1");
}

TEST(ParseBraid, Errors) {
  EXPECT_THROW(parse_braid("s3", 3), OutOfRange);
  EXPECT_THROW(parse_braid("s0", 3), OutOfRange);
  EXPECT_THROW(parse_braid("t1", 3), ParseError);
  EXPECT_THROW(parse_braid("s1^2", 3), ParseError);
  EXPECT_THROW(parse_braid("s", 3), ParseError);
  EXPECT_THROW(BraidWord(0), OutOfRange);
}

TEST(ApplyBraid, YangBaxterWordOnSeed) {
  const BraidWord w = parse_braid("s1 s2 s1", 3);
  EXPECT_EQ(str(apply_braid(w, tup("acd"), example())), "fca");
  EXPECT_EQ(oracle::trace({1, 2, 1}, "acd"), "fca");
  // stepwise
  EXPECT_EQ(oracle::trace({1}, "acd"), "cad");
  EXPECT_EQ(oracle::trace({1, 2}, "acd"), "cda");
}

TEST(ApplyBraid, FullTwist) {
  const BraidWord w = parse_braid("s1 s2 s1 s2 s1 s2", 3);
  EXPECT_EQ(oracle::trace(oracle::repeat({1, 2}, 3), "acd"), "aef");
  EXPECT_EQ(str(apply_braid(w, tup("acd"), example())), "aef");
}

TEST(ApplyBraid, InverseLettersCancel) {
  const BraidWord w = parse_braid("s1 s1^-1", 2);
  for (const auto& t : all_tuples(7, 2)) EXPECT_EQ(apply_braid(w, t, example()), t);
}

TEST(ApplyBraid, NegativeLetterMatchesOracle) {
  const BraidWord w = parse_braid("s2^-1 s1^-1 s2", 3);
  for (const auto& t : all_tuples(7, 3))
    ASSERT_EQ(str(apply_braid(w, t, example())), oracle::trace({-2, -1, 2}, str(t)));
}

TEST(ApplyBraid, ArityMismatch) {
  EXPECT_THROW(apply_braid(parse_braid("s1", 3), tup("ab"), example()), ArityMismatch);
}

TEST(EvalBraid, EmptyWordIsIdentity) {
  EXPECT_EQ(eval_braid(BraidWord(2), example()), Relation::identity(7, 2));
}

TEST(EvalBraid, YangBaxterWordsAgree) {
  EXPECT_EQ(eval_braid(parse_braid("s1 s2 s1", 3), example()),
            eval_braid(parse_braid("s2 s1 s2", 3), example()));
}

TEST(EvalBraid, SingleCrossingIsBraiding) {
  const Relation r = eval_braid(parse_braid("s1", 2), example());
  EXPECT_EQ(r.size(), 49u);
  EXPECT_EQ(r, braiding(1, 1, example()).relation());
  EXPECT_EQ(eval_braid(parse_braid("s1^-1", 2), example()), braiding_inverse(1, 1, example()).relation());
}

TEST(EvalBraid, CapExceeded) {
  EXPECT_THROW(eval_braid(BraidWord(8), example()), CapExceeded);
}

TEST(Torsion, Words) {
  EXPECT_EQ(format_braid(torsion(2)), "s1");
  EXPECT_EQ(format_braid(torsion(3)), "s1 s2 s1");
  EXPECT_EQ(torsion(4).length(), 6u);
  EXPECT_EQ(torsion(5).length(), 10u);
  EXPECT_THROW(torsion(1), OutOfRange);
}

TEST(Torsion, SquareIsFullTwist) {
  EXPECT_EQ(eval_braid(torsion(3).power(2), example()),
            eval_braid(parse_braid("s1 s2 s1 s2 s1 s2", 3), example()));
  EXPECT_EQ(eval_braid(torsion(4).power(2), example()),
            eval_braid(parse_braid("s1 s2 s3", 4).power(4), example()));
}

TEST(Probes, ThreeAndFourStrands) {
  const auto p3 = belt_probes(3, example());
  EXPECT_EQ(p3.seed.relation(), Relation(0, 3, {{Tuple{}, tup("acd")}, {Tuple{}, tup("bef")}}));
  EXPECT_EQ(p3.test.relation(), Relation(3, 0, {{tup("aef"), Tuple{}}, {tup("bcd"), Tuple{}}}));
  const auto p4 = belt_probes(4, example());
  EXPECT_TRUE(p4.seed.relation().contains(Tuple{}, tup("acd1")));
  EXPECT_TRUE(p4.test.relation().contains(tup("bcd1"), Tuple{}));
  EXPECT_TRUE(is_tangled(p3.seed, example()).all_passed());
}

TEST(Probes, Errors) {
  EXPECT_THROW(belt_probes(2, example()), OutOfRange);
  EXPECT_THROW(belt_probes(3, irack_from_group(cyclic_group(3))), Error);
}

TEST(BeltTrick, ThreeStrandsPeriodFour) {
  const bool expected[] = {false, false, true, false, false, false, true, false};
  for (std::size_t k = 0; k < 8; ++k) {
    const BeltReport r = belt_trick(3, k, example());
    EXPECT_EQ(r.point, expected[k]) << "k=" << k;
    ASSERT_EQ(r.trajectories.size(), 2u);
    for (const auto& tr : r.trajectories)
      EXPECT_EQ(str(tr.to), oracle::trace(oracle::repeat(oracle::half_twist(3), int(k)), str(tr.from)));
  }
}

TEST(BeltTrick, DoubleTorsionTrajectories) {
  const BeltReport r = belt_trick(3, 2, example());
  EXPECT_TRUE(r.point);
  EXPECT_EQ(str(r.trajectories[0].from), "acd");
  EXPECT_EQ(str(r.trajectories[0].to), "aef");
  EXPECT_EQ(str(r.trajectories[1].from), "bef");
  EXPECT_EQ(str(r.trajectories[1].to), "bcd");
  EXPECT_EQ(format_belt_report(example().carrier(), r),
            "n=3 k=2 result=point\ntrajectory: (a,c,d) -> (a,e,f)\ntrajectory: (b,e,f) -> (b,c,d)\n");
}

TEST(BeltTrick, FourStrands) {
  EXPECT_EQ(oracle::trace(oracle::repeat({1, 2, 3}, 4), "acd1"), "aef1");
  const BeltReport r = belt_trick(4, 2, example());
  EXPECT_TRUE(r.point);
  EXPECT_EQ(str(r.trajectories[0].to), "aef1");
  EXPECT_FALSE(belt_trick(4, 0, example()).point);
}

TEST(BeltTrick, FourthPowerFixesSeeds) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const BeltReport r = belt_trick(n, 4, example());
    for (const auto& tr : r.trajectories) EXPECT_EQ(tr.from, tr.to);
  }
}

TEST(Distinguish, Examples) {
  const auto p = belt_probes(3, example());
  const BraidWord t = torsion(3);
  const BraidWord id(3);
  const auto d2 = distinguish(t.power(2), id, p.seed, p.test, example());
  EXPECT_TRUE(d2.distinct);
  EXPECT_FALSE(d2.first.is_empty());
  EXPECT_TRUE(d2.second.is_empty());
  EXPECT_FALSE(distinguish(t, t, p.seed, p.test, example()).distinct);
  const auto d4 = distinguish(t.power(4), id, p.seed, p.test, example());
  EXPECT_FALSE(d4.distinct);
  EXPECT_TRUE(d4.first.is_empty());
  EXPECT_THROW(distinguish(t, torsion(4), p.seed, p.test, example()), ArityMismatch);
}

TEST(Distinguish, SandwichMatchesMaterializedComposite) {
  const auto p = belt_probes(3, example());
  for (std::size_t k = 0; k < 4; ++k) {
    const BraidWord w = torsion(3).power(k);
    const Relation full = compose(compose(p.seed, eval_braid(w, example())), p.test);
    EXPECT_EQ(sandwich(w, p.seed, p.test, example()), full);
  }
}
