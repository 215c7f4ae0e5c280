#include <gtest/gtest.h>

#include "ghostnum/catalog.hpp"
#include "ghostnum/error.hpp"
#include "ghostnum/jennings.hpp"
#include "ghostnum/radical.hpp"

using namespace ghostnum;

TEST(AugmentationIdeal, Dimensions) {
  EXPECT_EQ(augmentation_ideal(make_group({{0}}, 2, "1")).dimension(), 0u);
  const FpSubspace c2 = augmentation_ideal(build("C(2)"));
  EXPECT_EQ(c2.dimension(), 1u);
  EXPECT_EQ(c2.rows()[0], (std::vector<std::uint8_t>{1, 1}));  // e_g - e_1 over GF(2)
  EXPECT_EQ(augmentation_ideal(build("Q(8)")).dimension(), 7u);
}

TEST(IdealPowerStep, Examples) {
  const GroupTable c4 = build("C(4)");
  EXPECT_EQ(ideal_power_step(c4, FpSubspace(2, 4)).dimension(), 0u);
  EXPECT_EQ(ideal_power_step(c4, augmentation_ideal(c4)).dimension(), 2u);
  const GroupTable v4 = build("EA(2,2)");
  EXPECT_EQ(ideal_power_step(v4, augmentation_ideal(v4)).dimension(), 1u);
  EXPECT_THROW(ideal_power_step(c4, FpSubspace(2, 8)), Error);
  EXPECT_THROW(ideal_power_step(c4, FpSubspace(3, 4)), Error);
}

TEST(IdealPowerStep, GeneratorsGiveTheSameSubspaceAsAllElements) {
  for (int p : {2, 3})
    for (int n = 1; n <= (p == 2 ? 5 : 3); ++n)
      for (const auto& entry : catalog_of_order(p, n)) {
        const GroupTable& g = entry.group;
        const auto gens = whole_group(g).generators();
        FpSubspace a = augmentation_ideal(g), b = a;
        while (a.dimension() > 0) {
          a = ideal_power_step(g, a);
          b = ideal_power_step(g, b, gens);
          ASSERT_EQ(a, b) << entry.spec.to_string();
        }
      }
}

TEST(NilpotencyIndex, Examples) {
  EXPECT_EQ(nilpotency_index_radical(build("C(8)")), 8);
  EXPECT_EQ(nilpotency_index_radical(build("C(9)")), 9);
  EXPECT_EQ(nilpotency_index_radical(build("C(25)")), 25);
  EXPECT_EQ(nilpotency_index_radical(build("EA(2,3)")), 4);
  EXPECT_EQ(nilpotency_index_radical(build("D(8)")), 5);
  EXPECT_EQ(nilpotency_index_radical(make_group({{0}}, 2, "1")), 1);
  try {
    nilpotency_index_radical(build("C(16)"), 8);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
  }
}

TEST(RadicalProperties, CyclicPowersDropByOne) {
  const auto dims = radical_power_dims(build("C(9)"));
  EXPECT_EQ(dims, (std::vector<std::size_t>{8, 7, 6, 5, 4, 3, 2, 1, 0}));
}

TEST(RadicalProperties, StrictlyDecreasingAndBoundedByOrder) {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= (p == 2 ? 6 : p == 3 ? 4 : 3); ++n)
      for (const auto& entry : catalog_of_order(p, n)) {
        const GroupTable& g = entry.group;
        const auto dims = radical_power_dims(g);
        for (std::size_t s = 1; s < dims.size(); ++s) EXPECT_LT(dims[s], dims[s - 1]);
        const long long t = static_cast<long long>(dims.size());
        EXPECT_LE(t, static_cast<long long>(g.order()));
        EXPECT_EQ(t == static_cast<long long>(g.order()), classify(g).cyclic) << entry.spec.to_string();
      }
}

TEST(FpSubspaceTest, CanonicalForm) {
  const FpSubspace a = FpSubspace::span(3, 3, {{1, 2, 0}, {2, 1, 1}});
  const FpSubspace b = FpSubspace::span(3, 3, {{0, 0, 2}, {2, 1, 0}, {1, 2, 1}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dimension(), 2u);
  std::vector<std::vector<int>> rows;
  for (const auto& r : a.rows()) rows.emplace_back(r.begin(), r.end());
  EXPECT_EQ(FpSubspace::span(3, 3, rows), a);
  EXPECT_THROW(FpSubspace::span(3, 3, {{1, 2}}), Error);
}

TEST(EchelonBuilderTest, Gf2PackedRowsAcrossWordBoundary) {
  EchelonBuilder b(2, 130);
  std::vector<std::uint8_t> v(130, 0);
  v[129] = 1;
  EXPECT_TRUE(b.add(v));
  v[0] = 1;
  EXPECT_TRUE(b.add(v));
  EXPECT_FALSE(b.add(v));
  v[129] = 0;
  EXPECT_FALSE(b.add(v));
  const FpSubspace s = b.take();
  EXPECT_EQ(s.dimension(), 2u);
  EXPECT_EQ(s.rows()[0][0], 1);
  EXPECT_EQ(s.rows()[0][129], 0);
}
