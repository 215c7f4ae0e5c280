#include <gtest/gtest.h>

#include <random>

#include "ghostnum/bounds.hpp"
#include "ghostnum/error.hpp"
#include "ghostnum/stmod.hpp"

using namespace ghostnum;
using fp::FpMatrix;

namespace {

constexpr int kModuli[] = {2, 3, 4, 5, 7, 8, 9};

JordanModule random_module(std::mt19937& rng, int m, int max_blocks) {
  std::uniform_int_distribution<int> count(1, max_blocks), size(1, m);
  std::vector<int> blocks(static_cast<std::size_t>(count(rng)));
  for (int& b : blocks) b = size(rng);
  return JordanModule(m, blocks);
}

// A uniformly random equivariant map, as a random combination of a Hom basis.
ModuleMap random_map(std::mt19937& rng, const JordanModule& s, const JordanModule& t) {
  const fp::Scalar p = s.prime();
  std::uniform_int_distribution<fp::Scalar> coeff(0, p - 1);
  ModuleMap f = ModuleMap::zero(s, t);
  for (const ModuleMap& h : hom_basis(s, t)) f.matrix += coeff(rng) * h.matrix;
  f.matrix = fp::reduced(f.matrix, p);
  return f;
}

// A random equivariant automorphism: identity plus a map into the radical.
ModuleMap random_automorphism(std::mt19937& rng, const JordanModule& m) {
  const fp::Scalar p = m.prime();
  for (;;) {
    ModuleMap f = random_map(rng, m, m);
    if (fp::rank(f.matrix, p) == m.dimension()) return f;
  }
}

FpMatrix inverse_of(const FpMatrix& a, fp::Scalar p) {
  const fp::Index n = a.rows();
  FpMatrix aug(n, 2 * n);
  aug << a, FpMatrix::Identity(n, n);
  fp::rref_in_place(aug, p);
  return aug.rightCols(n);
}

int random_modulus(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kModuli) - 1);
  return kModuli[pick(rng)];
}

}  // namespace

TEST(JordanModuleTest, ConstructionAndErrors) {
  const JordanModule m(9, {2, 3});
  EXPECT_EQ(m.prime(), 3);
  EXPECT_EQ(m.dimension(), 5);
  EXPECT_EQ(m.offset(1), 2);
  EXPECT_THROW(JordanModule(6, {1}), Error);
  EXPECT_THROW(JordanModule(4, {5}), Error);
  EXPECT_THROW(JordanModule(4, {0}), Error);
  EXPECT_THROW(JordanModule(4, {}), Error);
  const FpMatrix x = JordanModule(4, {3}).shift();
  EXPECT_TRUE(fp::is_zero(fp::power(x, 3, 2), 2));
  EXPECT_FALSE(fp::is_zero(fp::power(x, 2, 2), 2));
}

TEST(TateDimension, Examples) {
  EXPECT_EQ(tate_dimension(JordanModule(4, {4}), 0), 0);
  EXPECT_EQ(tate_dimension(JordanModule(4, {4}), -1), 0);
  EXPECT_EQ(tate_dimension(JordanModule(4, {1}), 0), 1);
  EXPECT_EQ(tate_dimension(JordanModule(9, {2, 3}), -1), 2);
  EXPECT_EQ(tate_dimension(JordanModule(9, {2, 9, 3, 9}), 7), 2);
}

TEST(InducedTateMap, Examples) {
  const JordanModule j2(4, {2});
  const FpMatrix id = induced_tate_map(ModuleMap::identity(j2), 0);
  EXPECT_EQ(id, FpMatrix::Identity(1, 1));
  EXPECT_TRUE(fp::is_zero(induced_tate_map(ModuleMap::shift_power(j2, 1), 0), 2));
  const JordanModule big(9, {2, 4, 9});
  const FpMatrix zero = induced_tate_map(ModuleMap::zero(big, JordanModule(9, {1, 5})), -1);
  EXPECT_TRUE(fp::is_zero(zero, 3));
  ModuleMap bad = ModuleMap::identity(j2);
  bad.matrix(0, 1) = 1;
  try {
    induced_tate_map(bad, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotEquivariant);
  }
}

TEST(IsGhost, Examples) {
  for (int m : {4, 5, 8, 9})
    for (int a = 2; a < m; ++a) EXPECT_TRUE(is_ghost(ModuleMap::shift_power(JordanModule(m, {a}), 1))) << m << " " << a;
  ModuleMap scalar = ModuleMap::identity(JordanModule(5, {1}));
  scalar.matrix(0, 0) = 3;
  EXPECT_FALSE(is_ghost(scalar));
  const JordanModule free(8, {8});
  EXPECT_TRUE(is_ghost(ModuleMap::identity(free)));
  EXPECT_TRUE(is_ghost(hom_basis(free, JordanModule(8, {3})).back()));
}

TEST(IsStablyTrivial, Examples) {
  EXPECT_FALSE(is_stably_trivial(ModuleMap::shift_power(JordanModule(4, {2}), 1)));
  for (int m = 2; m <= 9; ++m) {
    if (m == 6) continue;
    for (int a = 1; a < m; ++a) {
      const JordanModule j(m, {a});
      EXPECT_TRUE(is_stably_trivial(ModuleMap::shift_power(j, std::min(a, m - a)))) << m << " " << a;
    }
    EXPECT_TRUE(is_stably_trivial(ModuleMap::identity(JordanModule(m, {m}))));
  }
}

TEST(Compose, Examples) {
  const JordanModule j(9, {4});
  const ModuleMap x = ModuleMap::shift_power(j, 1);
  EXPECT_EQ(compose(ModuleMap::identity(j), x).matrix, x.matrix);
  EXPECT_EQ(compose(x, x).matrix, ModuleMap::shift_power(j, 2).matrix);
  const ModuleMap x3 = compose(x, compose(x, x));
  EXPECT_EQ(x3.matrix, ModuleMap::shift_power(j, 3).matrix);
  EXPECT_FALSE(is_stably_trivial(x3));
  try {
    compose(x, ModuleMap::identity(JordanModule(9, {3})));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(HomBasis, BlockFormulaMatchesNullspace) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = random_modulus(rng);
    const JordanModule s = random_module(rng, m, 3), t = random_module(rng, m, 3);
    const auto direct = hom_basis(s, t);
    const auto solved = hom_basis_by_nullspace(s, t);
    ASSERT_EQ(direct.size(), solved.size()) << s.to_string() << " -> " << t.to_string();
    std::size_t expected = 0;
    for (int a : s.blocks())
      for (int b : t.blocks()) expected += static_cast<std::size_t>(std::min(a, b));
    EXPECT_EQ(direct.size(), expected);
    for (const auto& f : direct) EXPECT_TRUE(f.is_equivariant());
    FpMatrix both(s.dimension() * t.dimension(), static_cast<fp::Index>(2 * direct.size()));
    for (std::size_t k = 0; k < direct.size(); ++k) {
      both.col(static_cast<fp::Index>(k)) = fp::flatten(direct[k].matrix);
      both.col(static_cast<fp::Index>(direct.size() + k)) = fp::flatten(solved[k].matrix);
    }
    EXPECT_EQ(fp::rank(both, s.prime()), static_cast<fp::Index>(direct.size()));
  }
}

TEST(StableEndomorphisms, DimensionIsMinOfAAndMMinusA) {
  for (int m = 2; m <= 9; ++m) {
    if (m == 6) continue;
    for (int a = 1; a < m; ++a) {
      EXPECT_EQ(stable_endomorphism_dimension(a, m), std::min(a, m - a)) << "m=" << m << " a=" << a;
      const JordanModule j(m, {a});
      for (int L = 0; L <= a; ++L)
        EXPECT_EQ(!is_stably_trivial(ModuleMap::shift_power(j, L)), L < std::min(a, m - a))
            << "m=" << m << " a=" << a << " L=" << L;
    }
  }
}

TEST(StmodProperties, TateAdditivityAndPeriodicity) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = random_modulus(rng);
    const JordanModule a = random_module(rng, m, 3), b = random_module(rng, m, 3);
    std::vector<int> sum = a.blocks();
    sum.insert(sum.end(), b.blocks().begin(), b.blocks().end());
    const JordanModule ab(m, sum);
    const int d = static_cast<int>(rng() % 7) - 3;
    ASSERT_EQ(tate_dimension(ab, d), tate_dimension(a, d) + tate_dimension(b, d));
    int nonprojective = 0;
    for (int s : ab.blocks()) nonprojective += s < m;
    ASSERT_EQ(tate_dimension(ab, d), nonprojective);
    const ModuleMap f = random_map(rng, a, b);
    ASSERT_EQ(induced_tate_map(f, d), induced_tate_map(f, d + 2));
    ASSERT_EQ(induced_tate_map(f, d), induced_tate_map(f, d - 4));
  }
}

TEST(StmodProperties, GhostsFormAnIdealAndStablyTrivialImpliesGhost) {
  std::mt19937 rng(99);
  int ghosts_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = random_modulus(rng);
    const JordanModule a = random_module(rng, m, 2), b = random_module(rng, m, 2), c = random_module(rng, m, 2);
    // bias towards ghosts by multiplying with x
    ModuleMap f = random_map(rng, a, b);
    if (trial % 2 == 0) f = compose(ModuleMap::shift_power(b, 1), f);
    const ModuleMap g = random_map(rng, b, c);
    const ModuleMap h = random_map(rng, c, a);
    if (is_ghost(f)) {
      ++ghosts_seen;
      ASSERT_TRUE(is_ghost(compose(g, f)));
      ASSERT_TRUE(is_ghost(compose(f, h)));
    }
    if (is_stably_trivial(f)) {
      ASSERT_TRUE(is_ghost(f));
    }
    const ModuleMap gf = compose(g, f);
    if (is_stably_trivial(gf)) {
      ASSERT_TRUE(is_ghost(gf));
    }
  }
  EXPECT_GT(ghosts_seen, 300);
}

TEST(StmodProperties, ConjugationByAutomorphismsPreservesClassification) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = random_modulus(rng);
    const fp::Scalar p = prime_of_modulus(m);
    const JordanModule a = random_module(rng, m, 2), b = random_module(rng, m, 2);
    const ModuleMap f = random_map(rng, a, b);
    const ModuleMap u = random_automorphism(rng, a), v = random_automorphism(rng, b);
    ModuleMap conj{a, b, fp::multiply(fp::multiply(v.matrix, f.matrix, p), inverse_of(u.matrix, p), p)};
    ASSERT_TRUE(conj.is_equivariant());
    ASSERT_EQ(is_ghost(conj), is_ghost(f));
    ASSERT_EQ(is_stably_trivial(conj), is_stably_trivial(f));
  }
}

TEST(StmodProperties, GhostOnSingleBlocksIsTheSocleScalar) {
  // between single non-projective blocks, a map is a ghost iff both induced
  // 1x1 matrices vanish
  for (int m : {4, 5, 8, 9})
    for (int a = 1; a < m; ++a)
      for (int b = 1; b < m; ++b) {
        const JordanModule s(m, {a}), t(m, {b});
        for (const ModuleMap& h : hom_basis(s, t)) {
          const FpMatrix d0 = induced_tate_map(h, 0), d1 = induced_tate_map(h, -1);
          ASSERT_EQ(d0.rows(), 1);
          ASSERT_EQ(d0.cols(), 1);
          EXPECT_EQ(is_ghost(h), d0(0, 0) == 0 && d1(0, 0) == 0);
        }
      }
}

TEST(GhostChainSearch, Examples) {
  const auto c4 = ghost_chain_search(4, 1);
  ASSERT_TRUE(c4.certificate);
  EXPECT_EQ(c4.certificate->nodes.front().blocks(), std::vector<int>{2});
  EXPECT_TRUE(check_certificate(*c4.certificate));

  const auto c9 = ghost_chain_search(9, 3);
  ASSERT_TRUE(c9.certificate);
  EXPECT_EQ(c9.certificate->length(), 3u);
  for (const auto& node : c9.certificate->nodes) EXPECT_EQ(node.blocks(), std::vector<int>{4});
  for (const auto& e : c9.certificate->edges) EXPECT_EQ(e.matrix, JordanModule(9, {4}).shift());
  EXPECT_TRUE(check_certificate(*c9.certificate));

  for (int blocks = 1; blocks <= 4; ++blocks) {
    SearchBudget budget;
    budget.max_blocks = blocks;
    const auto c2 = ghost_chain_search(2, 1, budget);
    EXPECT_FALSE(c2.certificate);
    EXPECT_TRUE(c2.exhausted);
  }
}

TEST(GhostChainSearch, NoStableGhostsForC2AndC3WithFourBlocks) {
  SearchBudget budget;
  budget.max_blocks = 4;
  budget.max_nodes = 1000000;
  for (int m : {2, 3}) {
    const auto r = ghost_chain_search(m, 1, budget);
    EXPECT_FALSE(r.certificate) << m;
    EXPECT_TRUE(r.exhausted) << m;
  }
  EXPECT_EQ(nonprojective_modules(3, 4).size(), 14u);
}

TEST(GhostChainSearch, FallbackSearchFindsChainsWithoutShiftShortcut) {
  SearchBudget budget;
  budget.max_blocks = 2;
  const auto r = ghost_chain_search(5, 1, budget);
  ASSERT_TRUE(r.certificate);
  EXPECT_TRUE(check_certificate(*r.certificate));
  // beyond the bound nothing is found among single blocks
  SearchBudget small;
  small.max_nodes = 5000;
  const auto none = ghost_chain_search(8, 4, small);
  EXPECT_FALSE(none.certificate);
}

TEST(GhostChainSearch, TamperedCertificatesAreRejected) {
  auto c = ghost_chain_search(9, 3).certificate;
  ASSERT_TRUE(c);
  auto broken = *c;
  broken.edges[1].matrix = FpMatrix::Identity(4, 4);
  EXPECT_FALSE(check_certificate(broken));
  auto too_long = *ghost_chain_search(9, 3).certificate;
  too_long.nodes.push_back(too_long.nodes.back());
  too_long.edges.push_back(too_long.edges.back());
  EXPECT_FALSE(check_certificate(too_long));  // x^4 on J_4 is stably trivial over m = 9
}

TEST(CertifiedLowerBound, Examples) {
  EXPECT_EQ(certified_lower_bound(8).bound, 4);
  EXPECT_EQ(certified_lower_bound(3).bound, 1);
  EXPECT_EQ(certified_lower_bound(25).bound, 12);
  EXPECT_THROW(certified_lower_bound(64), Error);
  EXPECT_THROW(certified_lower_bound(12), Error);
  for (int m : {2, 4, 5, 9, 16, 27}) {
    const int p = prime_of_modulus(m);
    int n = 0;
    for (int v = m; v > 1; v /= p) ++n;
    EXPECT_EQ(certified_lower_bound(m).bound, ghost_number_cyclic(p, n)) << m;
  }
}
