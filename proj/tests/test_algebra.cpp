#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "fixtures.hpp"

using namespace moonfill;

namespace {

using Poly = std::map<std::vector<int>, std::int64_t>;

std::vector<int> strip(std::vector<int> e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

void add(Poly& p, std::vector<int> e, std::int64_t c) {
  e = strip(std::move(e));
  if ((p[e] += c) == 0) p.erase(e);
}

// (f - s_i f) / (x_i - x_{i+1}), termwise
Poly divided_difference(const Poly& f, int i, int n) {
  Poly out;
  for (const auto& [e0, c] : f) {
    auto e = e0;
    e.resize(static_cast<std::size_t>(n), 0);
    int a = e[static_cast<std::size_t>(i - 1)], b = e[static_cast<std::size_t>(i)];
    if (a == b) continue;
    int lo = std::min(a, b), m = std::abs(a - b);
    std::int64_t sign = a > b ? 1 : -1;
    // x^lo y^lo (x^m - y^m)/(x - y) = sum_t x^{lo+m-1-t} y^{lo+t}
    for (int t = 0; t < m; ++t) {
      auto g = e;
      g[static_cast<std::size_t>(i - 1)] = lo + m - 1 - t;
      g[static_cast<std::size_t>(i)] = lo + t;
      add(out, g, sign * c);
    }
  }
  return out;
}

std::map<std::vector<int>, Poly> schubert_by_divided_differences(int n) {
  std::vector<int> w0(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w0[static_cast<std::size_t>(i)] = n - i;
  Poly top;
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - 1 - i;
  add(top, e, 1);
  std::map<std::vector<int>, Poly> out = {{w0, top}};
  std::vector<std::vector<int>> todo = {w0};
  while (!todo.empty()) {
    auto w = todo.back();
    todo.pop_back();
    for (int i = 1; i < n; ++i) {
      if (w[static_cast<std::size_t>(i - 1)] < w[static_cast<std::size_t>(i)]) continue;
      auto v = w;
      std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
      if (out.count(v)) continue;
      out[v] = divided_difference(out[w], i, n);
      todo.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST(Algebra, SchubertAgainstDividedDifferences) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& [w, poly] : schubert_by_divided_differences(n)) {
      auto got = schubert(Permutation(w));
      EXPECT_EQ(got.terms(), poly) << "n=" << n;
    }
}

TEST(Algebra, SmallSchubertPolynomials) {
  auto p = schubert(Permutation({1, 3, 2}));
  EXPECT_EQ(p.to_string(), schubert(Permutation({1, 3, 2, 4})).to_string());
  EXPECT_EQ(p.eval_at_ones(), 2);
  EXPECT_EQ(schubert(sigma_k_ferrers(fixtures::ferrers_example(), 2)).eval_at_ones(), 747);
}

TEST(Algebra, RegionRestrictedSeries) {
  auto m = fixtures::moon_example();
  auto s = sigma_k_moon(m, 1);
  EXPECT_EQ(schubert_in_region(s, m).eval_at_ones(), 202);
  // on a Ferrers shape nothing is lost
  auto lambda = ferrers_shape({4, 3, 3, 1});
  auto t = sigma_k_ferrers(lambda, 1);
  EXPECT_EQ(schubert_in_region(t, lambda), schubert(t));
}

TEST(Algebra, PositivityOnStacks) {
  std::size_t nonzero = 0, total = 0;
  for (int k = 1; k <= 2; ++k)
    for (int h = 1; h <= 3; ++h)
      for (int w = 1; w <= 3; ++w)
        for (const auto& s : stacks_in_box(h, w)) {
          ++total;
          auto d = positivity_difference(s, k);
          EXPECT_GE(d.is_zero() ? 0 : d.min_coefficient(), 0);
          nonzero += !d.is_zero();
          EXPECT_TRUE(row_statistics(s, k).equal());
        }
  EXPECT_GT(nonzero, 0u);
  EXPECT_GT(total, nonzero);
  EXPECT_THROW(positivity_difference(fixtures::moon_example(), 1), Error);
}

TEST(Algebra, PositivityGolden) {
  // column heights 1, 3, 2
  auto s = classify({{1, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}});
  auto d = positivity_difference(s, 1);
  EXPECT_EQ(d.to_string(), "x3");
}

TEST(Algebra, UnivariatePolynomials) {
  EXPECT_EQ(q_integer(3).coefficients(), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(cyclotomic(6).coefficients(), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic(4).coefficients(), (std::vector<std::int64_t>{1, 0, 1}));
  auto [q, r] = divmod(q_integer(6), q_integer(3));
  EXPECT_EQ(q.coefficients(), (std::vector<std::int64_t>{1, 0, 0, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(exact_div(q_integer(5), q_integer(2)), Error);
}

TEST(Algebra, FPolynomial) {
  EXPECT_EQ(f_polynomial(5, 1).coefficients(), (std::vector<std::int64_t>{1, 0, 1, 1, 1, 0, 1}));
  EXPECT_EQ(f_polynomial(6, 1).eval(1), 14);
  EXPECT_EQ(f_polynomial(8, 2).eval(1), 84);
  EXPECT_EQ(f_polynomial(9, 2).eval(1), 594);
  EXPECT_EQ(f_polynomial(5, 1).mod_qn_minus_1(5), (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_THROW(f_polynomial(4, 2), Error);
}

TEST(Algebra, HankelDeterminants) {
  EXPECT_EQ(hankel_catalan(5, 1), 5);
  EXPECT_EQ(hankel_catalan(8, 2), 84);
  EXPECT_EQ(hankel_catalan(9, 2), 594);
  for (int n = 5; n <= 10; ++n) EXPECT_EQ(hankel_catalan(n, 1), catalan(n - 2));
  for (int n = 7; n <= 10; ++n) EXPECT_EQ(hankel_catalan(n, 2), f_polynomial(n, 2).eval(1));
}

TEST(Algebra, RootsOfUnity) {
  auto f = f_polynomial(8, 2);
  EXPECT_EQ(evaluate_at_root_of_unity(f, 1), 84);
  EXPECT_EQ(evaluate_at_root_of_unity(f, 2), 20);
  EXPECT_EQ(evaluate_at_root_of_unity(f, 4), 4);
  EXPECT_EQ(evaluate_at_root_of_unity(f, 8), 0);
}

TEST(Algebra, CyclicSieving) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 1}, {6, 1}, {7, 1}, {8, 2}}) {
    auto r = csp_check(n, k);
    EXPECT_TRUE(r.holds) << n << "," << k;
    EXPECT_TRUE(r.promotion_matches);
    for (const auto& row : r.rows) EXPECT_EQ(row.f_value, row.fixed_points);
  }
  auto r = csp_check(8, 2);
  EXPECT_EQ(r.count, 84);
  EXPECT_EQ(r.orbit_sizes, (std::vector<int>{2, 2, 4, 4, 4, 4, 8, 8, 8, 8, 8, 8, 8, 8}));
  std::vector<std::int64_t> fixed;
  for (const auto& row : r.rows) fixed.push_back(row.fixed_points);
  EXPECT_EQ(fixed, (std::vector<std::int64_t>{84, 0, 4, 0, 20, 0, 4, 0}));
}

TEST(Algebra, SmallCases) {
  EXPECT_EQ(schubert(Permutation::identity(3)).to_string(), MPoly::one().to_string());
  EXPECT_EQ(schubert(Permutation({2, 1})).terms(), (Poly{{{1}, 1}}));
  auto st = staircase_shape(6);
  auto s = Permutation({2, 4, 1, 3});
  EXPECT_EQ(schubert_in_region(s, st), schubert(s));
  auto m = fixtures::moon_example();
  auto sm = sigma_k_moon(m, 1);
  EXPECT_LT(schubert_in_region(sm, m).num_terms(), schubert(sm).num_terms());
  EXPECT_TRUE(positivity_difference(ferrers_shape({3, 2}), 1).is_zero());
  EXPECT_TRUE(positivity_difference(classify({{1, 1}, {1, 2}, {2, 2}, {1, 3}}), 2).is_zero());
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(f_polynomial(2 * k + 1, k).coefficients(), (std::vector<std::int64_t>{1}));
    EXPECT_EQ(hankel_catalan(2 * k + 1, k), 1);
    EXPECT_TRUE(csp_check(2 * k + 1, k).holds);
  }
  EXPECT_EQ(hankel_catalan(8, 2), catalan(4) * catalan(6) - catalan(5) * catalan(5));
}
