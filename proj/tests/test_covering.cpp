#include <gtest/gtest.h>

#include <random>

#include "covlab/classical.hpp"
#include "covlab/constructions.hpp"
#include "covlab/covering.hpp"
#include "oracle.hpp"

using namespace covlab;

TEST(Fingerprint, FixedPointSubgroup) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto a = Ambient::alternating(n);
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < n; ++i) rest.push_back(i);
    const auto k = PermGroup(n, alternating_generators_on(n, rest));
    const auto fp = fingerprint(a, k);
    for (const auto& e : class_table(a).entries())
      EXPECT_EQ(fp.contains(e.id), e.id.ctype.fixed_points() > 0) << a.label() << " " << e.id.to_string();
  }
}

TEST(Fingerprint, TrivialSubgroup) {
  const auto a = Ambient::symmetric(6);
  const auto fp = fingerprint(a, PermGroup(6));
  ASSERT_EQ(fp.classes().size(), 1U);
  EXPECT_EQ(fp.classes()[0].ctype.to_string(), "[1;1;1;1;1;1]");
}

TEST(Fingerprint, AffineGroupInA8) {
  const auto a8 = Ambient::alternating(8);
  const auto fp = fingerprint(a8, affine_group_gf2_3());
  for (const char* t : {"[2;2;2;2]", "[4;4]", "[2;6]"})
    EXPECT_TRUE(fp.contains({a8, CycleType::parse(t), Split::whole})) << t;
  EXPECT_TRUE(fp.contains({a8, CycleType::parse("[1;7]"), Split::plus}));
  EXPECT_TRUE(fp.contains({a8, CycleType::parse("[1;7]"), Split::minus}));
}

TEST(Fingerprint, Errors) {
  EXPECT_THROW(fingerprint(Ambient::alternating(5), symmetric_group(5)), PreconditionError);
  EXPECT_THROW(fingerprint(Ambient::alternating(5), symmetric_group(4)), DegreeMismatch);
}

TEST(StarStar, Examples) {
  const auto a5 = Ambient::alternating(5);
  const auto a4 = point_stabilizer(a5.group(), 4);
  const auto c5 = group_from_strings(5, {"(1 2 3 4 5)"});
  const auto ok = check_star_star(a5, a4, c5);
  EXPECT_TRUE(ok.verdict);
  EXPECT_TRUE(ok.inclusion.no_inclusions);
  EXPECT_TRUE(no_inclusion_automatic(ok));

  EXPECT_FALSE(check_star_star(a5, a4, a4).verdict);

  const auto s7 = Ambient::symmetric(7);
  const auto bad = check_star_star(s7, point_stabilizer(s7.group(), 6), affine_line_group(7));
  EXPECT_FALSE(bad.verdict);
  EXPECT_FALSE(bad.uncovered().empty());
  for (const auto& c : bad.uncovered()) EXPECT_EQ(c.id->ctype.fixed_points(), 0U);

  EXPECT_THROW(check_star_star(a5, a5.group(), c5), InvalidCandidate);
}

TEST(StarStar, WitnessesLieInTheirClassAndComponent) {
  const auto g = star2_a8();
  const auto r = check_star_star(*g.ambient, g.h, g.k);
  ASSERT_TRUE(r.verdict);
  const auto& table = class_table(*g.ambient);
  for (const auto& row : r.classes) {
    ASSERT_TRUE(row.witness.has_value());
    EXPECT_EQ(table.class_of(*row.witness), *row.id);
    EXPECT_TRUE((row.covered_by == CoveredBy::H ? g.h : g.k).contains(*row.witness));
  }
}

TEST(Star, Examples) {
  const auto s3 = symmetric_group(3);
  EXPECT_TRUE(check_star(s3, group_from_strings(3, {"(1 2)"}), alternating_group(3)).verdict);
  const auto a4 = alternating_group(4);
  const auto v4 = group_from_strings(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto r = check_star(a4, group_from_strings(4, {"(1 2 3)"}), v4);
  EXPECT_TRUE(r.verdict);
  ASSERT_TRUE(r.normalized_verdict.has_value());
  EXPECT_TRUE(*r.normalized_verdict);
  for (const auto& g : {s3, a4, symmetric_group(5)}) {
    const auto h = point_stabilizer(g, 0);
    EXPECT_FALSE(check_star(g, h, PermGroup(g.degree())).verdict);
  }
}

TEST(Generic, Examples) {
  const auto v4 = group_from_strings(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  std::vector<PermGroup> three{group_from_strings(4, {"(1 2)(3 4)"}), group_from_strings(4, {"(1 3)(2 4)"}),
                               group_from_strings(4, {"(1 4)(2 3)"})};
  EXPECT_TRUE(check_generic_covering(v4, three).verdict);
  EXPECT_FALSE(check_generic_covering(v4, {three[0], three[1]}).verdict);
  EXPECT_FALSE(check_generic_covering(v4, {three[0]}).verdict);
  // Inclusion between components is a separate failure.
  auto with_trivial = three;
  with_trivial.push_back(PermGroup(4));
  const auto r = check_generic_covering(v4, with_trivial);
  EXPECT_TRUE(r.union_full);
  EXPECT_FALSE(r.verdict);
}

TEST(Generic, TwoProperSubgroupsNeverCover) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_subgroup(rng, 5);
    if (g.order() < 4) continue;
    const auto a = oracle::random_subgroup(rng, 5);
    const auto b = oracle::random_subgroup(rng, 5);
    const auto ha = intersect(g, a), hb = intersect(g, b);
    if (!is_proper(g, ha) || !is_proper(g, hb)) continue;
    EXPECT_FALSE(check_generic_covering(g, {ha, hb}).union_full);
  }
}

TEST(NoInclusion, Examples) {
  EXPECT_TRUE(no_inclusion_automatic(star2_s5().verify()));
  EXPECT_TRUE(no_inclusion_automatic(star2_a8().verify()));
}

TEST(Intersection, Examples) {
  const auto s5 = Ambient::symmetric(5);
  const auto r5 = intersection_covering(s5, s5_h1(), s5_k1(), Ambient::alternating(5));
  EXPECT_TRUE(r5.verdict);
  const auto s6 = Ambient::symmetric(6);
  EXPECT_TRUE(intersection_covering(s6, s6_h2(), s6_k2(), Ambient::alternating(6)).verdict);
  EXPECT_THROW(intersection_covering(s5, intersect_with_alternating(s5_h1()), s5_k1(), Ambient::alternating(5)),
               PreconditionError);
}

// ---------------------------------------------------------------------------
// Oracle cross-checks.

namespace {

struct Case {
  Ambient ambient;
  PermGroup h, k;
};

// Random proper pairs; the subgroups are random two-generator subgroups,
// conjugates of point stabilizers and Young subgroups to get many positives.
std::vector<Case> random_cases(std::mt19937& rng, int count) {
  std::vector<Case> out;
  const std::vector<Ambient> ambients{Ambient::symmetric(4), Ambient::alternating(5), Ambient::symmetric(5),
                                      Ambient::alternating(6), Ambient::symmetric(6), Ambient::alternating(7)};
  std::vector<std::vector<PermGroup>> pools;
  for (const auto& a : ambients) {
    const auto g = a.group();
    std::vector<PermGroup> pool;
    for (std::size_t k = 1; 2 * k <= a.n; ++k) {
      std::vector<std::size_t> first(k), rest;
      std::iota(first.begin(), first.end(), std::size_t{0});
      for (std::size_t i = k; i < a.n; ++i) rest.push_back(i);
      auto y = young_subgroup(a.n, {first, rest});
      pool.push_back(a.is_alternating() ? intersect_with_alternating(y) : y);
    }
    if (a.n == 5) pool.push_back(a.is_alternating() ? intersect_with_alternating(s5_k1()) : s5_k1());
    if (a.n == 6) pool.push_back(a.is_alternating() ? intersect_with_alternating(s6_h2()) : s6_h2());
    if (a.n == 7) pool.push_back(intersect_with_alternating(affine_line_group(7)));
    pools.push_back(std::move(pool));
  }
  while (static_cast<int>(out.size()) < count) {
    const auto i = rng() % ambients.size();
    const auto& a = ambients[i];
    auto pick = [&]() {
      if (rng() % 2) {
        const auto& base = pools[i][rng() % pools[i].size()];
        return conjugate_group(base, oracle::to(oracle::random_perm(rng, static_cast<int>(a.n))));
      }
      return oracle::random_subgroup(rng, static_cast<int>(a.n), a.is_alternating());
    };
    auto h = pick();
    auto k = pick();
    if (!is_proper(a.group(), h) || !is_proper(a.group(), k)) continue;
    out.push_back({a, std::move(h), std::move(k)});
  }
  return out;
}

}  // namespace

TEST(StarStar, MatchesElementwiseUnion) {
  std::mt19937 rng(32);
  int positives = 0;
  for (const auto& c : random_cases(rng, 200)) {
    const auto g = oracle::elements(c.ambient.group());
    const bool expected = oracle::covers_star_star(g, oracle::elements(c.h), oracle::elements(c.k));
    const auto r = check_star_star(c.ambient, c.h, c.k);
    ASSERT_EQ(r.verdict, expected) << c.ambient.label();
    positives += expected;
    if (r.verdict) EXPECT_TRUE(no_inclusion_automatic(r));
  }
  EXPECT_GT(positives, 5);
}

TEST(StarStar, ConjugationInvariance) {
  std::mt19937 rng(33);
  for (const auto& c : random_cases(rng, 200)) {
    const auto n = static_cast<int>(c.ambient.n);
    auto g1 = oracle::random_perm(rng, n), g2 = oracle::random_perm(rng, n);
    if (c.ambient.is_alternating()) {
      if (!oracle::is_even(g1)) std::swap(g1[0], g1[1]);
      if (!oracle::is_even(g2)) std::swap(g2[0], g2[1]);
    }
    const auto moved = check_star_star(c.ambient, conjugate_group(c.h, oracle::to(g1)),
                                       conjugate_group(c.k, oracle::to(g2)), "H", "K", false);
    EXPECT_EQ(moved.verdict, check_star_star(c.ambient, c.h, c.k, "H", "K", false).verdict);
  }
}

TEST(StarStar, SingleClassNeverCovers) {
  std::mt19937 rng(34);
  for (const auto& c : random_cases(rng, 200)) EXPECT_FALSE(check_star_star(c.ambient, c.h, c.h).verdict);
}

TEST(Fingerprint, Monotone) {
  std::mt19937 rng(35);
  int checked = 0;
  while (checked < 200) {
    const int n = 4 + checked % 5;
    const auto big = oracle::random_subgroup(rng, n, false, 2);
    if (big.order() > 5000 || big.is_trivial()) continue;
    // A random subgroup of `big`: generated by a random element of it.
    const auto x = big.random_element(rng);
    const PermGroup small(static_cast<std::size_t>(n), {x});
    const auto s = Ambient::symmetric(static_cast<std::size_t>(n));
    EXPECT_TRUE(fingerprint(s, small).is_subset_of(fingerprint(s, big)));
    ++checked;
  }
}

TEST(Star, MatchesElementwiseUnion) {
  std::mt19937 rng(36);
  int checked = 0, positives = 0;
  while (checked < 200) {
    const int n = 3 + checked % 4;
    const auto g = oracle::random_subgroup(rng, n);
    if (g.order() < 4 || g.order() > 720) continue;
    const auto h = PermGroup(g.degree(), {g.random_element(rng)});
    const auto k = PermGroup(g.degree(), {g.random_element(rng), g.random_element(rng)});
    if (!is_proper(g, h) || !is_proper(g, k)) continue;
    const auto ge = oracle::elements(g);
    const bool expected = oracle::covers_star(ge, oracle::elements(h), oracle::elements(k));
    const auto r = check_star(g, h, k);
    ASSERT_EQ(r.verdict, expected);
    if (r.verdict) {
      ++positives;
      EXPECT_TRUE(*r.normalized_verdict);
    }
    ++checked;
  }
  EXPECT_GT(positives, 0);
}
