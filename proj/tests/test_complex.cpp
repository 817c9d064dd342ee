#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace moonfill;

TEST(Complex, SubwordWordOfSmallShapes) {
  EXPECT_EQ(subword_word(ferrers_shape({2, 1})), (std::vector<int>{2, 1, 2}));
  EXPECT_EQ(subword_word(staircase_shape(4)), (std::vector<int>{3, 2, 1, 3, 2, 3}));
}

TEST(Complex, SubwordFacetsDirect) {
  // word 1 2 1 for s_1: positions {0} or {2} spell it; facets are complements
  auto fs = subword_complex_facets({1, 2, 1}, Permutation({2, 1, 3}));
  EXPECT_EQ(fs, (std::vector<std::vector<int>>{{0, 1}, {1, 2}}));
}

TEST(Complex, PentagonIsACycle) {
  auto st = staircase_shape(5);
  auto c = build_complex(st, 1);
  EXPECT_EQ(c.facets.size(), 5u);
  auto passive = passive_boxes(st, 1);
  auto r = sphere_checks(c, &passive);
  EXPECT_EQ(r.dimension, 1);
  EXPECT_EQ(r.euler_characteristic, 0);
  EXPECT_TRUE(r.ok());
}

TEST(Complex, StaircasesAreSpheres) {
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= 2 && 2 * k < n; ++k) {
      auto st = staircase_shape(n);
      auto c = build_complex(st, k);
      auto passive = passive_boxes(st, k);
      auto r = sphere_checks(c, &passive);
      EXPECT_TRUE(r.ok()) << n << "," << k;
      EXPECT_EQ(subword_complex(st, sigma_k_ferrers(as_partition(st), k)).facets, c.facets);
      EXPECT_EQ(r.facet_size, static_cast<int>(st.size()) - length(sigma_k_ferrers(as_partition(st), k)));
    }
  auto c = build_complex(staircase_shape(8), 2);
  auto r = sphere_checks(c);
  EXPECT_EQ(r.num_facets, 84u);
  EXPECT_EQ(r.dimension, 5);
  EXPECT_EQ(r.euler_characteristic, 0);
}

TEST(Complex, DegenerateSinglefacet) {
  // a 1 x 3 row has no chains at all: one facet, everything is a cone point
  auto m = ferrers_shape({3});
  auto c = build_complex(m, 1);
  ASSERT_EQ(c.facets.size(), 1u);
  auto r = sphere_checks(c);
  EXPECT_EQ(r.cone_points.size(), 3u);
  EXPECT_TRUE(r.ok());
}

TEST(Complex, RectangleGivesABall) {
  // 2x3, k = 1: four free boxes whose chain graph is a path, so three facets
  // glued in a row; the free part is an interval, not a circle
  auto m = ferrers_shape({3, 3});
  auto c = build_complex(m, 1);
  auto passive = passive_boxes(m, 1);
  auto r = sphere_checks(c, &passive);
  EXPECT_EQ(r.num_facets, 3u);
  EXPECT_TRUE(r.cone_points_match_passive);
  EXPECT_TRUE(r.connected);
  EXPECT_FALSE(r.pseudomanifold);
  EXPECT_EQ(r.euler_characteristic, 1);
  EXPECT_FALSE(r.ok());
}

TEST(Complex, MoonExample) {
  auto m = fixtures::moon_example();
  auto c = build_complex(m, 1);
  auto passive = passive_boxes(m, 1);
  auto r = sphere_checks(c, &passive);
  EXPECT_EQ(r.num_facets, 202u);
  EXPECT_EQ(r.facet_size, static_cast<int>(m.size()) - length(sigma_k_moon(m, 1)));
  EXPECT_TRUE(r.cone_points_match_passive);
  EXPECT_TRUE(r.connected);
  EXPECT_EQ(subword_complex(m, sigma_k_moon(m, 1)).facets, c.facets);
}

TEST(Complex, Errors) {
  SimplicialComplex c{{{1, 1}, {1, 2}}, {{0}, {0, 1}}};
  try {
    sphere_checks(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPure);
  }
  EXPECT_THROW(build_complex(classify({{1, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 3}}), 1), Error);
}

TEST(Complex, SmallCases) {
  EXPECT_EQ(subword_word(classify({{1, 1}})), (std::vector<int>{1}));
  auto m = fixtures::moon_example();
  auto w = subword_word(m);
  EXPECT_EQ(w.size(), m.size());
  EXPECT_EQ(build_complex(staircase_shape(8), 2).facets.size(), 84u);
}
