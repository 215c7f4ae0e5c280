#include <gtest/gtest.h>

#include "ghostnum/bounds.hpp"
#include "ghostnum/catalog.hpp"
#include "ghostnum/jennings.hpp"

using namespace ghostnum;

namespace {

BoundsReport bounds_of(const char* spec, BoundsOptions options = {}) { return ghost_bounds(build(spec), options); }

}  // namespace

TEST(Classify, Examples) {
  const auto heis = classify(build("ES(3,1,+)"));
  EXPECT_TRUE(heis.extraspecial);
  EXPECT_EQ(heis.exponent, 3u);
  EXPECT_TRUE(heis.is_exponent_p_extraspecial);
  EXPECT_TRUE(heis.excluded_from_lower_bound);

  const auto minus = classify(build("ES(3,1,-)"));
  EXPECT_TRUE(minus.is_p1plus2_minus);
  EXPECT_TRUE(minus.excluded_from_lower_bound);

  const auto minus7 = classify(build("ES(7,1,-)"));
  EXPECT_TRUE(minus7.is_p1plus2_minus);
  EXPECT_FALSE(minus7.excluded_from_lower_bound);

  const auto mod16 = classify(build("Mod(16)"));
  EXPECT_TRUE(mod16.has_cyclic_maximal_subgroup);
  EXPECT_FALSE(mod16.extraspecial);

  const auto aes = classify(build("AES(3,1)"));
  EXPECT_TRUE(aes.almost_extraspecial);
  EXPECT_FALSE(aes.extraspecial);
  EXPECT_FALSE(aes.excluded_from_lower_bound);
}

TEST(GhostNumberCyclic, Examples) {
  EXPECT_EQ(ghost_number_cyclic(2, 3), 4);
  EXPECT_EQ(ghost_number_cyclic(3, 2), 4);
  EXPECT_EQ(ghost_number_cyclic(3, 1), 1);
  EXPECT_EQ(ghost_number_cyclic(2, 1), 1);
  EXPECT_EQ(ghost_number_cyclic(5, 2), 12);
  EXPECT_EQ(ghost_number_cyclic(7, 1), 3);
  EXPECT_EQ(ghost_number_cyclic(5, 0), 1);
}

TEST(ExactGhost, Examples) {
  auto exact = [](const char* spec) {
    const GroupTable g = build(spec);
    return exact_ghost_number(g, classify(g));
  };
  EXPECT_EQ(exact("C(2)xC(4)")->value, 4);
  EXPECT_EQ(exact("D(16)")->value, 5);
  EXPECT_EQ(exact("D(8)xC(2)")->value, 5);
  EXPECT_EQ(exact("C(9)")->value, 4);
  EXPECT_EQ(exact("EA(3,2)")->value, 3);
  EXPECT_EQ(exact("C(2)")->value, 1);
  EXPECT_EQ(exact("C(3)")->value, 1);
  EXPECT_FALSE(exact("Q(8)"));
  EXPECT_FALSE(exact("SD(16)"));
  EXPECT_FALSE(exact("Mod(16)"));
  EXPECT_FALSE(exact("ES(3,1,+)"));
}

TEST(GhostBounds, Examples) {
  const auto q8 = bounds_of("Q(8)");
  EXPECT_EQ(q8.ghost_lower, 3);
  EXPECT_EQ(q8.ghost_upper, 4);
  EXPECT_FALSE(q8.ghost_exact);
  EXPECT_EQ(q8.t_jennings, 5);
  EXPECT_EQ(q8.t_radical, 5);

  const auto c9 = bounds_of("C(9)");
  EXPECT_EQ(c9.ghost_exact, 4);

  const auto minus = bounds_of("ES(3,1,-)");
  EXPECT_GE(minus.ghost_lower, 4);
  EXPECT_EQ(minus.ghost_upper, 10);
  EXPECT_FALSE(minus.ghost_exact);

  const auto c2c8 = bounds_of("C(2)xC(8)");
  EXPECT_EQ(c2c8.ghost_exact, 8);

  BoundsOptions no_radical;
  no_radical.compute_radical = false;
  EXPECT_FALSE(bounds_of("D(8)", no_radical).t_radical);
}

TEST(GhostBounds, SourcesCoverEveryContributingValue) {
  const auto r = bounds_of("Q(8)");
  bool has_upper = false, has_lower = false;
  for (const auto& s : r.sources) {
    EXPECT_FALSE(s.provenance.empty());
    if (s.role == BoundRole::Upper && s.value == r.ghost_upper) has_upper = true;
    if (s.role == BoundRole::Lower && s.value == r.ghost_lower) has_lower = true;
  }
  EXPECT_TRUE(has_upper);
  EXPECT_TRUE(has_lower);
}

TEST(GhostBounds, MaximalSubgroupRuleReachesTheOddPrimeBound) {
  // Neither the central quotients of G nor its cyclic subgroups give 9 here;
  // a central quotient of a maximal subgroup does.
  BoundsOptions without;
  without.use_maximal_subgroups = false;
  without.compute_radical = false;
  EXPECT_LT(bounds_of("AES(3,1)", without).ghost_lower, 9);
  EXPECT_GE(bounds_of("AES(3,1)").ghost_lower, 9);
}

TEST(BoundsProperties, IntervalsAreConsistent) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= (p == 2 ? 6 : p == 3 ? 4 : 3); ++n)
      for (const auto& entry : catalog_of_order(p, n)) {
        SCOPED_TRACE(entry.spec.to_string());
        BoundsOptions with, without;
        without.use_maximal_subgroups = false;
        with.compute_radical = without.compute_radical = false;
        const auto r = ghost_bounds(entry.group, with);
        const auto plain = ghost_bounds(entry.group, without);
        EXPECT_LE(1, r.ghost_lower);
        EXPECT_LE(r.ghost_lower, r.ghost_upper);
        EXPECT_LT(r.ghost_upper, r.t_jennings);
        if (r.ghost_exact) {
          EXPECT_EQ(r.ghost_lower, *r.ghost_exact);
          EXPECT_EQ(r.ghost_upper, *r.ghost_exact);
        }
        // more sources never lower the bound
        EXPECT_GE(r.ghost_lower, plain.ghost_lower);
        EXPECT_EQ(r.ghost_upper, plain.ghost_upper);
        // the lower bound is at least every single central quotient
        for (const Subgroup& c : central_order_p_subgroups(entry.group))
          EXPECT_GE(r.ghost_lower, jennings_series(quotient(entry.group, c)).t);
      }
}

TEST(BoundsProperties, SplitOffC2CollapsesTheInterval) {
  for (const char* spec : {"D(8)xC(2)", "Q(8)xC(2)", "EA(2,3)", "EA(2,5)", "Q(16)xEA(2,2)", "AES(2,1)xC(2)"}) {
    const GroupTable g = build(spec);
    const auto split = find_c2_direct_factor(g);
    ASSERT_TRUE(split) << spec;
    const long long th = jennings_series(as_group(split->complement, "H")).t;
    const Element z[] = {split->involution};
    EXPECT_EQ(jennings_series(quotient(g, subgroup_generated(g, z))).t, th) << spec;
    const auto r = ghost_bounds(g);
    EXPECT_EQ(r.ghost_exact, r.t_jennings - 1) << spec;
    EXPECT_EQ(r.ghost_exact, th) << spec;
  }
  EXPECT_FALSE(find_c2_direct_factor(build("Q(8)")));
  EXPECT_FALSE(find_c2_direct_factor(build("C(8)")));
}

TEST(BoundsProperties, NoncyclicGroupsSitBelowTheCyclicValue) {
  for (int p : {2, 3, 5})
    for (int n = 2; n <= (p == 2 ? 7 : p == 3 ? 5 : 3); ++n)
      for (const auto& entry : catalog_of_order(p, n)) {
        if (classify(entry.group).cyclic) continue;
        const long long t = jennings_series(entry.group).t;
        long long pn1 = 1;
        for (int i = 1; i < n; ++i) pn1 *= p;
        if (p == 2) {
          EXPECT_LE(t - 1, pn1) << entry.spec.to_string();
        } else if (pn1 * p != 9) {
          EXPECT_LE(t - 1, pn1 + p - 2) << entry.spec.to_string();
          EXPECT_LT(pn1 + p - 2, ghost_number_cyclic(p, n));
        }
      }
}
