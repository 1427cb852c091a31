#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "grpmat/solver.hpp"
#include "oracles.hpp"

namespace grpmat {
namespace {

std::set<Permutation> sigma_set(const std::vector<SolutionPair>& pairs) {
  std::set<Permutation> out;
  for (const auto& p : pairs) out.insert(p.sigma());
  return out;
}

const SolutionPair& find_sigma(const std::vector<SolutionPair>& pairs, const Permutation& s) {
  const auto it = std::find_if(pairs.begin(), pairs.end(), [&](const SolutionPair& p) { return p.sigma() == s; });
  EXPECT_NE(it, pairs.end());
  return *it;
}

Permutation cyc4(std::vector<std::vector<int>> cycles) { return Permutation::from_cycles(4, cycles); }

TEST(Structured, Z4Solutions) {
  const auto sols = structured_solutions(build_B(catalog("Z4")));
  const std::set<Permutation> expected{Permutation::identity(4), cyc4({{1, 2, 3, 4}}), cyc4({{1, 3}, {2, 4}}),
                                       cyc4({{1, 4, 3, 2}})};
  EXPECT_EQ(sigma_set(sols), expected);
  // Ascending in sigma(1).
  for (std::size_t i = 0; i < sols.size(); ++i) EXPECT_EQ(sols[i].sigma()(1), static_cast<int>(i) + 1);
}

TEST(Structured, ComposeAndInvertInZ4) {
  const auto sols = structured_solutions(build_B(catalog("Z4")));
  const auto& r = find_sigma(sols, cyc4({{1, 2, 3, 4}}));
  const SolutionPair sq = compose(r, r);
  EXPECT_EQ(sq.sigma(), cyc4({{1, 3}, {2, 4}}));
  EXPECT_EQ(sq.x(), r.x() * r.x());
  EXPECT_EQ(sq.y(), r.y() * r.y());
  EXPECT_TRUE(sq.satisfies_equation());

  const SolutionPair inv = invert(r);
  EXPECT_EQ(inv.sigma(), cyc4({{1, 4, 3, 2}}));
  EXPECT_EQ(inv.x(), r.x().transpose());
  EXPECT_EQ(compose(r, inv).sigma(), Permutation::identity(4));
}

TEST(Structured, IdentityAlwaysPresent) {
  for (const auto& name : catalog_names()) {
    const auto sols = structured_solutions(build_B(catalog(name)));
    ASSERT_FALSE(sols.empty()) << name;
    EXPECT_TRUE(sols.front().sigma().is_identity()) << name;
  }
}

TEST(Structured, CyclicGroupsGiveExactlyTheLeftTranslations) {
  for (int n = 1; n <= 8; ++n) {
    const Group g = catalog("Z" + std::to_string(n));
    const auto embed = cayley_embed(g);
    EXPECT_EQ(sigma_set(structured_solutions(build_B(g))), std::set<Permutation>(embed.begin(), embed.end())) << n;
  }
}

// Counts for the non-cyclic catalog groups. The left translations are always
// among the solutions; the search finds every symmetry of the pair block.
TEST(Structured, NonCyclicCountsRegression) {
  const std::vector<std::pair<std::string, int>> expected{{"V4", 8},  {"S3", 1},    {"D4", 64},
                                                          {"Q8", 1},  {"Z2xZ4", 64}, {"Z2^3", 1152}};
  for (const auto& [name, count] : expected) {
    EXPECT_EQ(static_cast<int>(structured_solutions(build_B(catalog(name))).size()), count) << name;
  }
}

TEST(Structured, SearchMatchesExhaustiveCheck) {
  for (const auto& name : {"Z2", "Z3", "Z4", "V4", "Z5", "Z6", "S3"}) {
    const auto ctx = make_context(build_B(catalog(name)));
    const int n = ctx->n;
    std::set<Permutation> brute;
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
      const SolutionPair p(ctx, Permutation(images));
      if (p.satisfies_equation()) brute.insert(p.sigma());
    } while (std::next_permutation(images.begin(), images.end()));
    EXPECT_EQ(sigma_set(structured_solutions(ctx)), brute) << name;
  }
}

TEST(Structured, ReducedConditionMatchesFullEquation) {
  std::mt19937 rng(41);
  const auto names = catalog_names();
  for (int trial = 0; trial < 200; ++trial) {
    const Group g = catalog(names[rng() % names.size()]);
    const auto ctx = make_context(build_B(g));
    const Permutation s = testing::random_permutation(g.order(), rng);
    EXPECT_EQ(structured_condition_holds(*ctx, s), SolutionPair(ctx, s).satisfies_equation());
  }
}

TEST(Structured, PairsArePermutationMatrices) {
  for (const auto& pair : structured_solutions(build_B(catalog("V4")))) {
    for (const RatMatrix& m : {pair.x(), pair.y()}) {
      EXPECT_EQ(m * m.transpose(), RatMatrix::identity(m.rows()));
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) EXPECT_TRUE(m(r, c) == 0 || m(r, c) == 1);
    }
  }
}

TEST(Structured, IdentityMatrixAdmitsAllPermutations) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<RowLabel> layout;
    for (int i = 1; i <= n; ++i) layout.push_back(RowLabel::cube(i));
    const auto ctx = make_context(layout, RatMatrix::identity(n));
    int factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    EXPECT_EQ(static_cast<int>(structured_solutions(ctx).size()), factorial);
    const LinearCrossCheck check = cross_check_linear(ctx);
    EXPECT_EQ(check.space_dimension, n * n);
    EXPECT_TRUE(check.all_contained());
  }
}

TEST(Closure, ComposeAndInvertStayInside) {
  for (const auto& name : {"Z4", "V4", "Z6", "S3", "D4", "Q8", "Z2xZ4"}) {
    const auto ctx = make_context(build_B(catalog(name)));
    const auto sols = structured_solutions(ctx);
    const auto set = sigma_set(sols);
    for (const auto& p : sols) {
      EXPECT_TRUE(set.count(invert(p).sigma())) << name;
      for (const auto& q : sols) EXPECT_TRUE(set.count(compose(p, q).sigma())) << name;
    }
  }
}

TEST(Compose, MixedContext) {
  const auto a = structured_solutions(build_B(catalog("Z4")));
  const auto b = structured_solutions(build_B(catalog("V4")));
  try {
    compose(a[1], b[1]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedContext);
  }
  // Equal matrices in separate contexts are the same B.
  const auto c = structured_solutions(build_B(catalog("Z4")));
  EXPECT_NO_THROW(compose(a[1], c[1]));
}

TEST(SolutionGroup, Z4IsCyclic) {
  const SolutionGroup sg = solution_group(build_B(catalog("Z4")));
  EXPECT_EQ(sg.order(), 4);
  const Group g = sg.as_group();
  int max_order = 0;
  for (int a = 1; a <= 4; ++a) max_order = std::max(max_order, g.element_order(a));
  EXPECT_EQ(max_order, 4);
  EXPECT_EQ(sg.labeling, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_TRUE(brute_iso(g, catalog("Z4")).has_value());
}

TEST(SolutionGroup, KleinSolutionGroupHasOrderEight) {
  const SolutionGroup sg = solution_group(build_B(catalog("V4")));
  EXPECT_EQ(sg.order(), 8);
  // The four left translations form a Klein subgroup inside it.
  const auto embed = cayley_embed(catalog("V4"));
  std::set<Permutation> sigmas;
  for (const auto& e : sg.elements) sigmas.insert(e.sigma());
  for (const auto& s : embed) EXPECT_TRUE(sigmas.count(s));
  EXPECT_TRUE(brute_iso(sg.as_group(), catalog("D4")).has_value());
}

// Left translations realized against I_n, where every permutation solves.
SolutionGroup translations(const Group& g) {
  const int n = g.order();
  std::vector<RowLabel> layout;
  for (int i = 1; i <= n; ++i) layout.push_back(RowLabel::cube(i));
  const auto ctx = make_context(layout, RatMatrix::identity(n));
  SolutionGroup out;
  for (const auto& s : cayley_embed(g)) out.elements.emplace_back(ctx, s);
  out.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto prod = out.elements[a].sigma() * out.elements[b].sigma();
      for (int c = 0; c < n; ++c)
        if (out.elements[c].sigma() == prod) out.table[a][b] = c + 1;
    }
  for (const auto& e : out.elements) out.labeling.push_back(e.sigma()(1));
  return out;
}

TEST(Psi, TranslationsLabelHomomorphically) {
  const PsiReport z4 = psi_check(translations(catalog("Z4")), catalog("Z4"));
  EXPECT_TRUE(z4.bijective);
  EXPECT_TRUE(z4.homomorphism && z4.anti_homomorphism);

  const PsiReport v4 = psi_check(translations(catalog("V4")), catalog("V4"));
  EXPECT_EQ(v4.verdict(), "homomorphism and anti-homomorphism");

  // sigma_a sigma_b (1) = a b: homomorphism, and Q8 is not abelian.
  const PsiReport q8 = psi_check(translations(catalog("Q8")), catalog("Q8"));
  EXPECT_EQ(q8.products_checked, 64);
  EXPECT_TRUE(q8.homomorphism);
  EXPECT_FALSE(q8.anti_homomorphism);
}

TEST(Psi, NotBijective) {
  const SolutionGroup sg = solution_group(build_B(catalog("V4")));
  try {
    psi_check(sg, catalog("V4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBijective);
  }
}

TEST(CrossCheck, ContainmentAndDimensions) {
  // B has full column rank, so (X, Y) -> XB - BY is onto m x n matrices.
  for (const auto& name : {"Z1", "Z2", "Z3", "Z4", "V4", "S3"}) {
    const BMatrix b = build_B(catalog(name));
    const int m = b.rows(), n = b.n();
    const LinearCrossCheck r = cross_check_linear(b);
    EXPECT_TRUE(r.all_contained()) << name;
    EXPECT_EQ(r.unknowns, m * m + n * n) << name;
    EXPECT_EQ(r.space_dimension, m * m + n * n - m * n) << name;
  }
}

TEST(CrossCheck, SizeLimitPropagates) {
  try {
    cross_check_linear(build_B(catalog("Z4")), 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
}

}  // namespace
}  // namespace grpmat
