#include <gtest/gtest.h>

#include <numeric>

#include "ghostnum/catalog.hpp"
#include "ghostnum/jennings.hpp"

using namespace ghostnum;

TEST(Jennings, ElementaryAbelianTwoGroups) {
  for (int r = 1; r <= 5; ++r) {
    const auto j = jennings_series(build("EA(2," + std::to_string(r) + ")"));
    EXPECT_EQ(j.series.size(), 2u);
    EXPECT_EQ(j.dims, std::vector<int>{r});
    EXPECT_EQ(j.t, r + 1);
  }
}

TEST(Jennings, ExtraspecialOfOrder27) {
  const auto plus = jennings_series(build("ES(3,1,+)"));
  EXPECT_EQ(plus.dims, (std::vector<int>{2, 1}));
  EXPECT_EQ(plus.t, 9);
  EXPECT_TRUE(plus.series[1] == structural_subgroups(plus.group).frattini);

  const auto minus = jennings_series(build("ES(3,1,-)"));
  // Gamma_2 = Gamma_3 = Phi, Gamma_4 = 1
  EXPECT_EQ(minus.dims, (std::vector<int>{2, 0, 1}));
  EXPECT_TRUE(minus.series[1] == minus.series[2]);
  EXPECT_TRUE(minus.series[3].is_trivial());
  EXPECT_EQ(minus.t, 11);
}

TEST(Jennings, CyclicAndDihedral) {
  EXPECT_EQ(jennings_series(build("C(16)")).t, 16);
  EXPECT_EQ(jennings_series(build("C(25)")).t, 25);
  EXPECT_EQ(jennings_series(build("D(8)")).t, 5);
  EXPECT_EQ(jennings_series(build("Q(16)")).t, 9);
}

TEST(ClosedForm, Examples) {
  auto closed = [](const char* spec) {
    const GroupTable g = build(spec);
    return t_closed_form(g, classify(g));
  };
  const auto c16 = closed("C(16)");
  ASSERT_TRUE(c16);
  EXPECT_EQ(c16->t, 16);
  EXPECT_EQ(c16->source, ClosedFormSource::Cyclic);
  const auto q8 = closed("Q(8)");
  ASSERT_TRUE(q8);
  EXPECT_EQ(q8->t, 5);
  EXPECT_EQ(q8->source, ClosedFormSource::CyclicMaximal);
  const auto d8c2 = closed("D(8)xC(2)");
  ASSERT_TRUE(d8c2);
  EXPECT_EQ(d8c2->t, 6);
  EXPECT_EQ(d8c2->source, ClosedFormSource::FrattiniOrderP);
  EXPECT_EQ(to_string(ClosedFormSource::FrattiniOrderP), "frattini-order-p");
  const auto ea = closed("EA(3,3)");
  ASSERT_TRUE(ea);
  EXPECT_EQ(ea->t, 7);
}

TEST(JenningsProperties, SeriesShapeAndFormulas) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= (p == 2 ? 7 : p == 3 ? 5 : 3); ++n)
      for (const auto& entry : catalog_of_order(p, n)) {
        SCOPED_TRACE(entry.spec.to_string());
        const GroupTable& g = entry.group;
        const auto j = jennings_series(g);
        ASSERT_FALSE(j.series.empty());
        EXPECT_EQ(j.series.front().order(), g.order());
        EXPECT_TRUE(j.series.back().is_trivial());
        for (std::size_t s = 1; s < j.series.size(); ++s) EXPECT_TRUE(j.series[s].is_subset_of(j.series[s - 1]));
        EXPECT_EQ(std::accumulate(j.dims.begin(), j.dims.end(), 0), n);
        long long weighted = 0;
        for (std::size_t s = 0; s < j.dims.size(); ++s) weighted += static_cast<long long>(s + 1) * j.dims[s];
        EXPECT_EQ(j.t, 1 + (p - 1) * weighted);

        const auto flags = classify(g);
        if (const auto cf = t_closed_form(g, flags)) {
          EXPECT_EQ(cf->t, j.t) << to_string(cf->source);
        }
        if (!flags.elementary_abelian) {
          EXPECT_GE(j.t, static_cast<long long>(n + 1) * (p - 1) + 1);
        }
        if (!flags.cyclic && flags.has_cyclic_maximal_subgroup) {
          long long pn1 = 1;
          for (int i = 1; i < n; ++i) pn1 *= p;
          EXPECT_LT(pn1, j.t);
          EXPECT_LT(j.t, static_cast<long long>(g.order()));
          EXPECT_EQ(j.t, pn1 + p - 1);
        }
      }
}

TEST(JenningsProperties, DirectFactorsOfOrderTwoAddOne) {
  for (const char* h : {"D(8)", "Q(8)", "C(4)", "SD(16)", "Mod(16)", "AES(2,1)", "C(2)xC(8)"}) {
    const long long th = jennings_series(build(h)).t;
    std::string spec = h;
    for (int r = 1; r <= 3; ++r) {
      spec += "xC(2)";
      const GroupTable g = build(spec);
      if (g.order() > 128) break;
      EXPECT_EQ(jennings_series(g).t, th + r) << spec;
    }
  }
}
