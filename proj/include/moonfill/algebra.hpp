#pragma once

// Schubert polynomials as pipe-dream generating series, the stack positivity
// difference, the q-count F(q), Catalan Hankel determinants, and a cyclic
// sieving check for rotation of k-triangulations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/pipedreams.hpp"
#include "moonfill/polynomial.hpp"
#include "moonfill/shapes.hpp"
#include "moonfill/triangulations.hpp"
#include "moonfill/words.hpp"

namespace moonfill {

namespace detail {
inline MPoly row_generating_series(const std::vector<PipeDream>& dreams) {
  MPoly p;
  for (const auto& d : dreams) p.add_term(row_crossing_vector(d), 1);
  return p;
}
}  // namespace detail

/// Sum over reduced pipe dreams of the product of x_row over crossings.
inline MPoly schubert(const Permutation& s, const Caps& caps = Caps::defaults()) {
  return detail::row_generating_series(enumerate_rp(s, caps));
}

/// The same sum restricted to pipe dreams whose crossings lie in m.
inline MPoly schubert_in_region(const Permutation& s, const Polyomino& m, const Caps& caps = Caps::defaults()) {
  return detail::row_generating_series(enumerate_rp_in(s, m, caps));
}

/// S_{sigma_k(S)} - S_{sigma_k(lambda)} for a stack S and its Ferrers
/// rearrangement lambda; every coefficient must be nonnegative.
inline MPoly positivity_difference(const Polyomino& stack, int k, const Caps& caps = Caps::defaults()) {
  if (!stack.at_least(ShapeClass::stack)) throw Error(ErrorCode::NotStack, "shape is not a stack polyomino");
  auto lambda = stack_to_ferrers(stack);
  MPoly diff = schubert(sigma_k_moon(stack, k), caps) - schubert(sigma_k_ferrers(lambda, k), caps);
  if (!diff.is_zero() && diff.min_coefficient() < 0)
    throw Error(ErrorCode::NegativeCoefficient, "difference has a negative coefficient: " + diff.to_string());
  return diff;
}

/// Row-crossing vectors over RP(sigma_k(S), S) and over RP(sigma_k(lambda)),
/// as multisets (vector -> multiplicity).
struct RowStatistics {
  std::map<std::vector<int>, std::int64_t> stack;
  std::map<std::vector<int>, std::int64_t> ferrers;
  bool equal() const { return stack == ferrers; }
};

inline RowStatistics row_statistics(const Polyomino& stack, int k, const Caps& caps = Caps::defaults()) {
  if (!stack.at_least(ShapeClass::stack)) throw Error(ErrorCode::NotStack, "shape is not a stack polyomino");
  auto lambda = stack_to_ferrers(stack);
  RowStatistics r;
  auto count = [](const std::vector<PipeDream>& ds, std::map<std::vector<int>, std::int64_t>& out) {
    for (const auto& d : ds) {
      auto v = row_crossing_vector(d);
      while (!v.empty() && v.back() == 0) v.pop_back();
      ++out[v];
    }
  };
  count(enumerate_rp_in(sigma_k_moon(stack, k), stack, caps), r.stack);
  count(enumerate_rp(sigma_k_ferrers(lambda, k), caps), r.ferrers);
  return r;
}

inline UPoly q_integer(int m) { return UPoly::q_integer(m); }

/// prod_{1 <= i <= j < n-2k} [i+j+2k]_q / [i+j]_q
inline UPoly f_polynomial(int n, int k) {
  if (k < 1 || n < 2 * k + 1) throw Error(ErrorCode::OutOfRange, "need k >= 1 and n > 2k");
  UPoly num = UPoly::constant(1), den = UPoly::constant(1);
  const int ell = n - 2 * k;
  for (int i = 1; i < ell; ++i)
    for (int j = i; j < ell; ++j) {
      num = num * q_integer(i + j + 2 * k);
      den = den * q_integer(i + j);
    }
  auto f = exact_div(num, den);
  for (auto c : f.coefficients())
    if (c < 0) throw Error(ErrorCode::NegativeCoefficient, "F(q) has a negative coefficient");
  return f;
}

/// det(Cat_{n-2k+i+j-2})_{1 <= i, j <= k}
inline std::int64_t hankel_catalan(int n, int k) {
  if (k < 1 || n < 2 * k + 1) throw Error(ErrorCode::OutOfRange, "need k >= 1 and n > 2k");
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = catalan(n - 2 * k + i + j - 2);
  return to_int64(determinant(std::move(m)));
}

/// F(zeta) for a primitive m-th root of unity when it is an integer.
inline std::optional<std::int64_t> evaluate_at_root_of_unity(const UPoly& f, int m) {
  auto [q, r] = divmod(f, cyclotomic(m));
  if (r.degree() > 0) return std::nullopt;
  return r[0];
}

struct CspRow {
  int d = 0;                          // rotation power
  std::int64_t fixed_points = 0;      // #{T : rho^d T = T}
  std::optional<std::int64_t> f_value;  // F(zeta^d), zeta primitive n-th root
};

struct CspReport {
  int n = 0;
  int k = 0;
  std::int64_t count = 0;
  std::vector<int> orbit_sizes;               // sorted
  std::vector<int> promotion_orbit_sizes;     // sorted, on flagged tableaux
  std::vector<CspRow> rows;                   // d = 0 .. n-1
  std::vector<std::int64_t> f_mod;            // F mod q^n - 1
  std::vector<std::int64_t> orbit_mod;        // sum over orbits, mod q^n - 1
  bool holds = false;
  bool promotion_matches = false;
};

inline CspReport csp_check(int n, int k, const Caps& caps = Caps::defaults()) {
  CspReport rep;
  rep.n = n;
  rep.k = k;
  auto ts = enumerate_triangulations(n, k, caps);
  rep.count = static_cast<std::int64_t>(ts.size());

  std::map<Triangulation, int> index;
  for (std::size_t i = 0; i < ts.size(); ++i) index[ts[i]] = static_cast<int>(i);
  std::vector<int> next(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) next[i] = index.at(rotate(ts[i]));

  std::vector<char> seen(ts.size(), 0);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (seen[i]) continue;
    int size = 0;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(next[j])) {
      seen[j] = 1;
      ++size;
    }
    rep.orbit_sizes.push_back(size);
  }
  std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());

  rep.orbit_mod.assign(static_cast<std::size_t>(n), 0);
  for (int size : rep.orbit_sizes)
    for (int t = 0; t < size; ++t) ++rep.orbit_mod[static_cast<std::size_t>(t * (n / size))];

  auto f = f_polynomial(n, k);
  rep.f_mod = f.mod_qn_minus_1(n);
  rep.holds = rep.f_mod == rep.orbit_mod;

  for (int d = 0; d < n; ++d) {
    CspRow row;
    row.d = d;
    for (int size : rep.orbit_sizes)
      if ((d % size) == 0) row.fixed_points += size;
    row.f_value = evaluate_at_root_of_unity(f, n / std::gcd(n, d));
    rep.rows.push_back(row);
  }

  // orbit structure of flagged promotion on the recording tableaux
  auto mu = inner_shape(as_partition(staircase_shape(n)), k);
  auto tabs = enumerate_flagged(mu, k, caps);
  std::map<Tableau, int> tindex;
  for (std::size_t i = 0; i < tabs.size(); ++i) tindex[tabs[i]] = static_cast<int>(i);
  std::vector<char> tseen(tabs.size(), 0);
  for (std::size_t i = 0; i < tabs.size(); ++i) {
    if (tseen[i]) continue;
    int size = 0;
    Tableau cur = tabs[i];
    for (auto j = i; !tseen[j];) {
      tseen[j] = 1;
      ++size;
      cur = flagged_promotion(cur, k);
      j = static_cast<std::size_t>(tindex.at(cur));
    }
    rep.promotion_orbit_sizes.push_back(size);
  }
  std::sort(rep.promotion_orbit_sizes.begin(), rep.promotion_orbit_sizes.end());
  rep.promotion_matches = rep.promotion_orbit_sizes == rep.orbit_sizes;
  return rep;
}

}  // namespace moonfill
