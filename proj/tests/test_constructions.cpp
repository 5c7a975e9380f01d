#include <gtest/gtest.h>

#include "covlab/classical.hpp"
#include "covlab/constructions.hpp"
#include "covlab/search.hpp"
#include "oracle.hpp"

using namespace covlab;

TEST(Gallery, AllEntriesVerify) {
  const auto entries = gallery();
  ASSERT_EQ(entries.size(), 11U);
  for (const auto& c : entries) {
    const auto r = c.verify();
    EXPECT_TRUE(r.verdict) << c.label;
    EXPECT_TRUE(r.inclusion.evaluated && r.inclusion.no_inclusions) << c.label;
    EXPECT_TRUE(no_inclusion_automatic(r)) << c.label;
  }
  EXPECT_FALSE(gallery_entry("star2/S7").has_value());
  EXPECT_EQ(gallery_entry("star2/A7")->h.order(), 21U);
  EXPECT_EQ(gallery_entry("star2/A8")->h.order(), 1344U);
}

TEST(Gallery, SmallEntriesMatchElementwiseOracle) {
  for (const auto& c : gallery()) {
    if (c.group.order() > 720) continue;
    const auto g = oracle::elements(c.group);
    const auto h = oracle::elements(c.h), k = oracle::elements(c.k);
    const bool expected = c.kind == CoveringKind::star ? oracle::covers_star(g, h, k) : oracle::covers_star_star(g, h, k);
    EXPECT_TRUE(expected) << c.label;
  }
}

TEST(Gallery, Structure) {
  EXPECT_EQ(s5_h1().order(), 12U);
  EXPECT_EQ(s5_k1().order(), 20U);
  EXPECT_EQ(s6_h2().order(), 72U);
  EXPECT_EQ(s6_k2().order(), 120U);
  EXPECT_EQ(star2_a6_alt().k.order(), 24U);
  EXPECT_TRUE(is_transitive(star2_a6_alt().k));
  // Odd elements named for the intersection coverings.
  EXPECT_TRUE(s5_h1().contains(parse_perm("(1 2)", 5)));
  EXPECT_TRUE(s5_k1().contains(parse_perm("(2 3 5 4)", 5)));
  EXPECT_TRUE(s6_h2().contains(parse_perm("(1 2)", 6)));
  EXPECT_TRUE(s6_k2().contains(parse_perm("(2 3)", 6)));
}

TEST(Gallery, A7Mu) {
  const auto mu = a7_mu();
  EXPECT_EQ(mu.to_string(), "(2 4 3 7 5 6)");
  const auto sigma = parse_perm("(1 2 3 4 5 6 7)", 7);
  EXPECT_EQ(conjugate(sigma, mu), sigma.pow(3));
  EXPECT_EQ(mu.pow(2).cycle_type().to_string(), "[1;3;3]");
  EXPECT_TRUE(mu.pow(2).is_even());
  EXPECT_FALSE(mu.is_even());
}

TEST(Gallery, A7SplitClassesCoveredByH) {
  const auto c = star2_a7();
  const auto r = c.verify();
  int sevens = 0;
  for (const auto& row : r.classes)
    if (row.id->ctype.to_string() == "[7]") {
      EXPECT_EQ(row.covered_by, CoveredBy::H);
      ++sevens;
    }
  EXPECT_EQ(sevens, 2);
}

TEST(Gallery, A8SplitClassesCoveredByK) {
  const auto c = star2_a8();
  const auto r = c.verify();
  int found = 0;
  for (const auto& row : r.classes)
    if (row.id->ctype.to_string() == "[3;5]") {
      EXPECT_EQ(row.covered_by, CoveredBy::K);
      ++found;
    }
  EXPECT_EQ(found, 2);
}

TEST(Gallery, TransitivityForLargeDegrees) {
  for (const auto& c : gallery()) {
    if (c.group.degree() < 5 || c.kind != CoveringKind::star_star) continue;
    const auto t = transitivity_report(c.h, c.k);
    EXPECT_NE(t, Transitivity::neither) << c.label;
    if (c.group.degree() >= 7) EXPECT_EQ(t, Transitivity::exactly_one) << c.label;
  }
  EXPECT_EQ(transitivity_report(star2_a5().h, star2_a5().k), Transitivity::exactly_one);
}

TEST(AffineGroup, Properties) {
  const auto h = affine_group_gf2_3();
  EXPECT_EQ(h.order(), 1344U);
  for (const auto& g : h.generators()) EXPECT_TRUE(g.is_even());
  for (int a = 1; a < 8; ++a) {
    const auto t = affine_map_gf2_3({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {a & 1, (a >> 1) & 1, (a >> 2) & 1});
    EXPECT_EQ(t.cycle_type().to_string(), "[2;2;2;2]");
    EXPECT_TRUE(h.contains(t));
  }
  // Point labelling: vector (x1, x2, x3) is point 1 + x1 + 2 x2 + 4 x3.
  const auto shift = affine_map_gf2_3({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {1, 0, 0});
  EXPECT_EQ(shift.to_string(), "(1 2)(3 4)(5 6)(7 8)");
}

TEST(ClassicalGroups, Orders) {
  EXPECT_EQ(affine_line_group(7).order(), 42U);
  EXPECT_EQ(affine_plane_group_gf3().order(), 432U);
  EXPECT_EQ(linear_group_gf2_3_on_7().order(), 168U);
  EXPECT_EQ(projective_line_group(5, false).order(), 120U);
  EXPECT_EQ(projective_line_group(7, false).order(), 336U);
  EXPECT_EQ(projective_line_group(8, true).order(), 1512U);
  EXPECT_EQ(projective_line_group(9, true).order(), 1440U);
}
