#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace moonfill;

namespace {
std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}
}  // namespace

TEST(Perm, Basics) {
  Permutation s({3, 1, 2});
  EXPECT_EQ(s(1), 3);
  EXPECT_EQ(s.inverse().oneline(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(Permutation({2, 1, 3, 4}).trimmed().oneline(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(same_up_to_padding(Permutation({2, 1}), Permutation({2, 1, 3})));
  EXPECT_THROW(Permutation({1, 1, 2}), Error);
}

TEST(Perm, LengthAndDiagramAgainstInversions) {
  for (const auto& p : all_perms(5)) {
    Permutation s(p);
    EXPECT_EQ(length(s), fixtures::inversions(p));
    EXPECT_EQ(static_cast<int>(rothe_diagram(s).size()), fixtures::inversions(p));
  }
}

TEST(Perm, RankCountsDots) {
  Permutation s({3, 1, 4, 2});
  EXPECT_EQ(rank(s, 1, 2), 0);
  EXPECT_EQ(rank(s, 2, 3), 2);
  EXPECT_EQ(rank(s, 4, 4), 4);
}

TEST(Perm, EssentialSetDeterminesPermutation) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_perms(n)) {
      Permutation s(p);
      EXPECT_EQ(perm_from_essential_set(essential_set(s), n), s);
    }
}

TEST(Perm, SigmaOfFerrersShape) {
  auto s = sigma_k_ferrers(fixtures::ferrers_example(), 2);
  EXPECT_EQ(s.oneline(), (std::vector<int>{1, 2, 7, 6, 5, 8, 3, 4, 9, 10}));
  std::vector<EssentialBox> want = {{{3, 6}, 2}, {{4, 5}, 2}, {{6, 4}, 2}};
  EXPECT_EQ(essential_set(s), want);
  // the square: one diagonal flip
  EXPECT_EQ(sigma_k_ferrers(Partition{3, 2, 1}, 1).trimmed().oneline(), (std::vector<int>{1, 3, 2}));
  EXPECT_EQ(sigma_k_ferrers(as_partition(staircase_shape(8)), 2).trimmed().oneline(),
            (std::vector<int>{1, 2, 6, 5, 4, 3}));
}

TEST(Perm, SigmaOfMoon) {
  auto m = fixtures::moon_example();
  std::vector<EssentialBox> want = {{{4, 7}, 2}, {{4, 9}, 3}, {{6, 6}, 3}, {{7, 5}, 3}, {{8, 4}, 3}};
  EXPECT_EQ(essential_set_for_moon(m, 1), want);
  auto s = sigma_k_moon(m, 1);
  EXPECT_TRUE(same_up_to_padding(s, Permutation({1, 2, 8, 10, 3, 7, 6, 5, 4, 9})));
  EXPECT_EQ(essential_set(s), want);
  Permutation printed({1, 2, 8, 10, 3, 7, 6, 5, 4, 9});
  EXPECT_EQ(essential_set(printed), want);
  EXPECT_EQ(perm_from_essential_set(want, 10), printed);
  EXPECT_EQ(rank(printed, 7, 5), 3);
  EXPECT_EQ(rank(printed, 4, 7), 2);
}

TEST(Perm, ReducedWords) {
  EXPECT_EQ(reduced_words(Permutation({3, 2, 1})).size(), 2u);
  EXPECT_EQ(reduced_words(Permutation({4, 3, 2, 1})).size(), 16u);
  for (const auto& w : reduced_words(Permutation({2, 4, 1, 3}))) {
    EXPECT_EQ(fixtures::apply_word(w, 4), (std::vector<int>{2, 4, 1, 3}));
    EXPECT_TRUE(is_reduced_word_for(w, Permutation({2, 4, 1, 3})));
  }
  EXPECT_FALSE(is_reduced_word_for({1, 1}, Permutation::identity(2)));
}

TEST(Perm, SmallCases) {
  EXPECT_EQ(length(Permutation({1, 2, 6, 5, 4, 3, 7, 8})), 6);
  EXPECT_EQ(length(Permutation::identity(4)), 0);
  EXPECT_TRUE(rothe_diagram(Permutation::identity(3)).empty());
  EXPECT_EQ(rothe_diagram(Permutation({2, 1})), (std::vector<BoxCoord>{{1, 1}}));
  EXPECT_EQ(essential_set(Permutation({2, 1})), (std::vector<EssentialBox>{{{1, 1}, 0}}));
  EXPECT_TRUE(essential_set(Permutation::identity(3)).empty());
  EXPECT_EQ(rank(Permutation::identity(5), 4, 4), 4);
  EXPECT_EQ(dominant_from_shape(Partition{2, 1}).trimmed().oneline(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(dominant_from_shape(Partition{1}).trimmed().oneline(), (std::vector<int>{2, 1}));
  EXPECT_TRUE(dominant_from_shape(Partition{}).is_identity());
  EXPECT_TRUE(sigma_k_ferrers(Partition{2, 2}, 2).is_identity());
  EXPECT_EQ(perm_from_essential_set({}, 3), Permutation::identity(3));
  EXPECT_EQ(perm_from_essential_set({{{1, 1}, 0}}, 2), Permutation({2, 1}));
  EXPECT_EQ(reduced_words(Permutation({2, 1})), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(reduced_words(Permutation::identity(3)), (std::vector<std::vector<int>>{{}}));
}

TEST(Perm, DiagramOfFerrersSigma) {
  // the inner shape (4,3,2,2) shifted to start at (3,3)
  std::vector<BoxCoord> want;
  const int rows[] = {4, 3, 2, 2};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < rows[i]; ++j) want.push_back({3 + i, 3 + j});
  EXPECT_EQ(rothe_diagram(sigma_k_ferrers(fixtures::ferrers_example(), 2)), want);
}

TEST(Perm, MoonEssentialSetAgreesOnFerrers) {
  for (const auto& mu : partitions_in_staircase(6)) {
    if (mu.empty()) continue;
    for (int k = 1; k <= 2; ++k)
      EXPECT_EQ(essential_set_for_moon(ferrers_shape(mu), k), essential_set(sigma_k_ferrers(mu, k)));
  }
  EXPECT_TRUE(essential_set_for_moon(ferrers_shape({5, 1}), 1).empty());
}
