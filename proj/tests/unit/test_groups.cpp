#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "grpmat/groups.hpp"
#include "oracles.hpp"

namespace grpmat {
namespace {

using testing::associativity_witness;
using testing::classified_catalog;
using testing::cyclic_table;
using testing::is_latin;

bool has_code(const ValidationResult& r, ErrorCode code) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.code == code; });
}

// Identity first and Latin but not associative (both checked by the oracles).
const Table kLoop5 = {
    {1, 2, 3, 4, 5},
    {2, 1, 4, 5, 3},
    {3, 5, 1, 2, 4},
    {4, 3, 5, 1, 2},
    {5, 4, 2, 3, 1},
};

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({1, 1}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
  EXPECT_NO_THROW(Permutation({2, 1}));
}

TEST(Permutation, CycleStringAndComposition) {
  const auto s = Permutation::from_cycles(4, {{1, 2, 3, 4}});
  EXPECT_EQ(s.cycle_string(), "(1 2 3 4)");
  EXPECT_EQ((s * s).cycle_string(), "(1 3)(2 4)");
  EXPECT_EQ(s.inverse().cycle_string(), "(1 4 3 2)");
  EXPECT_EQ(Permutation::identity(3).cycle_string(), "()");

  // Right-to-left: (a*b)(x) = a(b(x)).
  const auto a = Permutation::from_cycles(3, {{1, 2}});
  const auto b = Permutation::from_cycles(3, {{2, 3}});
  EXPECT_EQ((a * b)(1), 2);
  EXPECT_EQ((a * b)(2), 3);
  EXPECT_EQ((a * b)(3), 1);
}

TEST(Permutation, CyclesIncludeFixedPointsFromTheirMinimum) {
  const auto s = Permutation({3, 2, 4, 1});
  const std::vector<std::vector<int>> expected{{1, 3, 4}, {2}};
  EXPECT_EQ(s.cycles(), expected);
}

TEST(Validate, AcceptsCyclicTables) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = validate(cyclic_table(n));
    EXPECT_TRUE(r.ok()) << n;
    EXPECT_TRUE(r.violations.empty());
  }
}

TEST(Validate, ReportsMisplacedIdentity) {
  const auto r = validate({{2, 1}, {1, 2}});
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_code(r, ErrorCode::IdentityViolated));
}

TEST(Validate, ReportsNonLatinRows) {
  const auto r = validate({{1, 2, 3}, {2, 2, 1}, {3, 1, 2}});
  EXPECT_TRUE(has_code(r, ErrorCode::NotLatinSquare));
}

TEST(Validate, ReportsAssociativityWithGenuineWitness) {
  ASSERT_TRUE(is_latin(kLoop5));
  ASSERT_TRUE(associativity_witness(kLoop5).has_value());

  const auto r = validate(kLoop5);
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(has_code(r, ErrorCode::NotAssociative));
  EXPECT_FALSE(has_code(r, ErrorCode::NotLatinSquare));
  EXPECT_FALSE(has_code(r, ErrorCode::IdentityViolated));
  for (const auto& v : r.violations) {
    if (v.code != ErrorCode::NotAssociative) continue;
    ASSERT_EQ(v.witness.size(), 3u);
    const int a = v.witness[0], b = v.witness[1], c = v.witness[2];
    EXPECT_NE(kLoop5[kLoop5[a - 1][b - 1] - 1][c - 1], kLoop5[a - 1][kLoop5[b - 1][c - 1] - 1]);
  }
}

TEST(Validate, ReportsMissingInverse) {
  // {e, z} with z*z = z: an associative monoid, not a group.
  const auto r = validate({{1, 2}, {2, 2}});
  EXPECT_TRUE(has_code(r, ErrorCode::NoInverse));
}

TEST(Validate, MalformedShapes) {
  EXPECT_TRUE(has_code(validate({}), ErrorCode::MalformedFile));
  EXPECT_TRUE(has_code(validate({{1, 2}, {2}}), ErrorCode::MalformedFile));
  EXPECT_TRUE(has_code(validate({{1, 3}, {3, 1}}), ErrorCode::MalformedFile));
}

TEST(Group, FromTableThrowsWithAllViolations) {
  try {
    Group::from_table(kLoop5);
    FAIL() << "expected GroupValidationError";
  } catch (const GroupValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
    EXPECT_FALSE(e.violations().empty());
  }
}

TEST(Group, ElementQueries) {
  const Group z6 = catalog("Z6");
  EXPECT_EQ(z6.element_order(1), 1);
  EXPECT_EQ(z6.element_order(2), 6);
  EXPECT_EQ(z6.element_order(3), 3);
  EXPECT_EQ(z6.element_order(4), 2);
  EXPECT_TRUE(z6.is_abelian());
  EXPECT_FALSE(catalog("S3").is_abelian());
  for (int a = 1; a <= 6; ++a) EXPECT_EQ(z6.mul(a, z6.inverse(a)), 1);
}

TEST(Group, RelabeledMustFixIdentity) {
  const Group z4 = catalog("Z4");
  EXPECT_THROW(z4.relabeled(Permutation({2, 1, 3, 4})), Error);
  const Group r = z4.relabeled(Permutation({1, 4, 3, 2}));
  // New element 2 is old a^3.
  EXPECT_EQ(r.mul(2, 2), 3);
  EXPECT_EQ(r.mul(2, 3), 4);
}

TEST(Catalog, NamesAndOrders) {
  const auto names = catalog_names();
  EXPECT_EQ(names.size(), 14u);
  for (const auto& name : names) {
    const Group g = catalog(name);
    EXPECT_TRUE(validate(g.table()).ok()) << name;
  }
  EXPECT_EQ(catalog("Z2xZ2"), catalog("V4"));
  EXPECT_EQ(catalog("Z2xZ2xZ2"), catalog("Z2^3"));
  EXPECT_THROW(catalog("Z9"), Error);
  try {
    catalog("nope");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownName);
  }
}

TEST(Catalog, CyclicGroupsUsePowerOrdering) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(catalog("Z" + std::to_string(n)).table(), cyclic_table(n));
}

TEST(Catalog, S3OrderingMatchesNamedPermutations) {
  // e,(12),(13),(23),(123),(132) composed right to left.
  const std::vector<Permutation> perms{
      Permutation::identity(3),           Permutation::from_cycles(3, {{1, 2}}),
      Permutation::from_cycles(3, {{1, 3}}), Permutation::from_cycles(3, {{2, 3}}),
      Permutation::from_cycles(3, {{1, 2, 3}}), Permutation::from_cycles(3, {{1, 3, 2}})};
  const Group s3 = catalog("S3");
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      const auto product = perms[a - 1] * perms[b - 1];
      EXPECT_EQ(perms[s3.mul(a, b) - 1], product);
    }
  }
}

TEST(Catalog, ElementOrderProfiles) {
  auto profile = [](const Group& g) {
    std::vector<int> o;
    for (int a = 1; a <= g.order(); ++a) o.push_back(g.element_order(a));
    std::sort(o.begin(), o.end());
    return o;
  };
  EXPECT_EQ(profile(catalog("Q8")), (std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4}));
  EXPECT_EQ(profile(catalog("D4")), (std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4}));
  EXPECT_EQ(profile(catalog("Z2^3")), (std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(profile(catalog("Z2xZ4")), (std::vector<int>{1, 2, 2, 2, 4, 4, 4, 4}));
}

TEST(GroupFile, RoundTrip) {
  for (const auto& name : catalog_names()) {
    const Group g = catalog(name);
    const Group back = parse_group(serialize_group(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.names(), g.names());
  }
}

TEST(GroupFile, Errors) {
  auto code_of = [](std::string_view text) -> std::optional<ErrorCode> {
    try {
      parse_group(text);
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  EXPECT_EQ(code_of("not json"), ErrorCode::MalformedFile);
  EXPECT_EQ(code_of(R"({"n": 2})"), ErrorCode::MalformedFile);
  EXPECT_EQ(code_of(R"({"n": 3, "table": [[1,2],[2,1]]})"), ErrorCode::MalformedFile);
  EXPECT_EQ(code_of(R"({"n": 2, "table": [[2,1],[1,2]]})"), ErrorCode::IdentityViolated);
  EXPECT_EQ(code_of(R"({"n": 2, "table": [[1,2],[2,1]]})"), std::nullopt);
}

TEST(Cayley, EmbeddingIsAHomomorphism) {
  for (const auto& name : catalog_names()) {
    const Group g = catalog(name);
    const auto sigmas = cayley_embed(g);
    ASSERT_EQ(static_cast<int>(sigmas.size()), g.order());
    for (int a = 1; a <= g.order(); ++a) {
      EXPECT_EQ(sigmas[a - 1](1), a);
      for (int b = 1; b <= g.order(); ++b) EXPECT_EQ(sigmas[a - 1] * sigmas[b - 1], sigmas[g.mul(a, b) - 1]);
    }
  }
}

TEST(CycleDecompose, S3SecondTranslation) {
  const auto sigmas = cayley_embed(catalog("S3"));
  // (12) composed with each element, read back in catalog order.
  EXPECT_EQ(sigmas[1], Permutation::from_cycles(6, {{1, 2}, {3, 6}, {4, 5}}));
  const CycleData d = cycle_decompose(sigmas[1]);
  EXPECT_EQ(d.anchor_cycle, (std::vector<int>{1, 2}));
  EXPECT_EQ(d.leaders, (std::vector<int>{3, 4}));
  EXPECT_EQ(d.cycle_lengths, (std::vector<int>{2, 2}));
  EXPECT_EQ(d.k(), 2);
}

TEST(CycleDecompose, CyclicHasNoLeaders) {
  const CycleData d = cycle_decompose(cayley_embed(catalog("Z4"))[1]);
  EXPECT_EQ(d.anchor_cycle, (std::vector<int>{1, 2, 3, 4}));
  EXPECT_TRUE(d.leaders.empty());
}

TEST(CycleDecompose, RequiresSigmaTwoToMoveOneToTwo) {
  EXPECT_THROW(cycle_decompose(Permutation::identity(3)), Error);
  EXPECT_THROW(cycle_decompose(Permutation::identity(1)), Error);
}

TEST(BruteIso, AgreesWithEnumerationOracle) {
  const auto names = classified_catalog();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      const Group g = catalog(names[i]), h = catalog(names[j]);
      const auto phi = brute_iso(g, h);
      EXPECT_EQ(phi.has_value(), testing::isomorphic_by_enumeration(g.table(), h.table()))
          << names[i] << " " << names[j];
    }
  }
}

TEST(BruteIso, RandomRelabelingsAreIsomorphicWithValidWitness) {
  std::mt19937 rng(20261015);
  for (const auto& name : catalog_names()) {
    const Group g = catalog(name);
    for (int trial = 0; trial < 5; ++trial) {
      const Group h = g.relabeled(testing::random_permutation(g.order(), rng, true));
      const auto phi = brute_iso(g, h);
      ASSERT_TRUE(phi.has_value()) << name;
      for (int a = 1; a <= g.order(); ++a)
        for (int b = 1; b <= g.order(); ++b) EXPECT_EQ((*phi)(g.mul(a, b)), h.mul((*phi)(a), (*phi)(b)));
    }
  }
}

TEST(Enumerate, CountsPerOrder) {
  const std::vector<int> expected{1, 1, 1, 2, 1, 2, 1, 5};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(static_cast<int>(enumerate_groups(n).size()), expected[n - 1]) << n;
    EXPECT_EQ(static_cast<int>(enumerate_groups(n, EnumerationMode::Exhaustive).size()), expected[n - 1]) << n;
  }
  EXPECT_THROW(enumerate_groups(0), Error);
  EXPECT_THROW(enumerate_groups(9), Error);
}

TEST(Enumerate, ExhaustiveMatchesClassifiedUpToIsomorphism) {
  for (int n = 1; n <= 8; ++n) {
    const auto found = enumerate_groups(n, EnumerationMode::Exhaustive);
    for (const auto& name : classified_names(n)) {
      const Group g = catalog(name);
      const auto hits = std::count_if(found.begin(), found.end(), [&](const Group& h) { return brute_iso(g, h).has_value(); });
      EXPECT_EQ(hits, 1) << name;
    }
  }
}

}  // namespace
}  // namespace grpmat
