#pragma once

// k-triangulations of the convex n-gon, encoded as k-NE fillings of the
// staircase (n-1, ..., 1): diagonal {a, b} with a < b sits in box (n+1-b, a).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/paths.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/pipedreams.hpp"
#include "moonfill/polynomial.hpp"
#include "moonfill/shapes.hpp"

namespace moonfill {

struct Diagonal {
  int a = 0;  // a < b
  int b = 0;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

inline Diagonal make_diagonal(int x, int y) { return x < y ? Diagonal{x, y} : Diagonal{y, x}; }

inline bool is_trivial(Diagonal d, int n, int k) { return d.b - d.a <= k || d.b - d.a >= n - k; }

/// Strict interleaving of endpoints around the circle.
inline bool crosses(Diagonal d, Diagonal e) {
  return (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
}

struct Triangulation {
  int n = 0;
  int k = 0;
  std::vector<Diagonal> diagonals;  // sorted; includes every trivial pair

  std::vector<Diagonal> nontrivial() const {
    std::vector<Diagonal> out;
    for (auto d : diagonals)
      if (!is_trivial(d, n, k)) out.push_back(d);
    return out;
  }
  bool contains(Diagonal d) const { return std::binary_search(diagonals.begin(), diagonals.end(), d); }

  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;
};

namespace detail {

/// True if some k+1 of the given diagonals pairwise cross.
inline bool has_crossing_family(const std::vector<Diagonal>& ds, int size) {
  std::vector<int> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == size) return true;
    for (std::size_t i = from; i < ds.size(); ++i) {
      bool ok = true;
      for (int c : chosen)
        if (!crosses(ds[static_cast<std::size_t>(c)], ds[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(i));
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace detail

/// Builds and validates a k-triangulation from any set of diagonals; trivial
/// diagonals are added automatically.
inline Triangulation make_triangulation(int n, int k, const std::vector<Diagonal>& given) {
  if (k < 1 || n < 2 * k + 1) throw Error(ErrorCode::InvalidTriangulation, "need k >= 1 and n > 2k");
  std::vector<Diagonal> ds;
  for (auto d : given) {
    if (d.a < 1 || d.b > n || d.a >= d.b) throw Error(ErrorCode::InvalidTriangulation, "diagonal endpoints out of range");
    ds.push_back(d);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (is_trivial({a, b}, n, k)) ds.push_back({a, b});
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  Triangulation t{n, k, ds};

  auto nt = t.nontrivial();  // trivial diagonals cross nothing of interest
  if (detail::has_crossing_family(nt, k + 1))
    throw Error(ErrorCode::InvalidTriangulation, "k+1 diagonals cross pairwise");
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Diagonal d{a, b};
      if (t.contains(d)) continue;
      auto more = nt;
      more.push_back(d);
      if (!detail::has_crossing_family(more, k + 1))
        throw Error(ErrorCode::InvalidTriangulation, "diagonal set is not maximal");
    }
  return t;
}

inline BoxCoord diagonal_box(Diagonal d, int n) { return {n + 1 - d.b, d.a}; }
inline Diagonal box_diagonal(BoxCoord b, int n) { return {b.col, n + 1 - b.row}; }

inline Filling triangulation_to_filling(const Triangulation& t) {
  std::vector<BoxCoord> marks;
  for (auto d : t.diagonals) marks.push_back(diagonal_box(d, t.n));
  std::sort(marks.begin(), marks.end());
  return Filling{staircase_shape(t.n), std::move(marks)};
}

namespace detail {
// Encoding without revalidation, for fillings already known to be maximal.
inline Triangulation triangulation_from_marks(int n, int k, const std::vector<BoxCoord>& marks) {
  std::vector<Diagonal> ds;
  for (auto b : marks) ds.push_back(box_diagonal(b, n));
  std::sort(ds.begin(), ds.end());
  return Triangulation{n, k, std::move(ds)};
}
}  // namespace detail

inline Triangulation filling_to_triangulation(const Filling& f, int k) {
  const int n = staircase_size(f.shape);
  if (!(f.shape == staircase_shape(n))) throw Error(ErrorCode::InvalidTriangulation, "filling is not of a staircase");
  std::vector<Diagonal> ds;
  for (auto b : f.marks) ds.push_back(box_diagonal(b, n));
  return make_triangulation(n, k, ds);
}

/// Relabels every vertex v as v+1 (n as 1).
inline Triangulation rotate(const Triangulation& t) {
  std::vector<Diagonal> ds;
  for (auto d : t.diagonals) ds.push_back(make_diagonal(d.a % t.n + 1, d.b % t.n + 1));
  std::sort(ds.begin(), ds.end());
  return Triangulation{t.n, t.k, std::move(ds)};
}

/// Exchanges d for the unique other diagonal completing T \ {d}; computed by
/// mutating the complementary pipe dream.
inline Triangulation flip(const Triangulation& t, Diagonal d) {
  if (is_trivial(d, t.n, t.k)) throw Error(ErrorCode::TrivialDiagonal, "trivial diagonals lie in every k-triangulation");
  if (!t.contains(d)) throw Error(ErrorCode::InvalidInput, "diagonal not in the triangulation");
  auto f = triangulation_to_filling(t);
  auto m = mutate(complementary_map(f, t.n), diagonal_box(d, t.n));
  std::vector<Diagonal> ds;
  for (auto e : t.diagonals)
    if (e != d) ds.push_back(e);
  ds.push_back(box_diagonal(m.released, t.n));
  std::sort(ds.begin(), ds.end());
  return Triangulation{t.n, t.k, std::move(ds)};
}

/// Neighbours j of v with k < |v - j| < n - k.
inline int degree(const Triangulation& t, int v) {
  int deg = 0;
  for (auto d : t.nontrivial()) deg += d.a == v || d.b == v;
  return deg;
}

/// All neighbours of v, the 2k forced ones included.
inline int total_degree(const Triangulation& t, int v) {
  int deg = 0;
  for (auto d : t.diagonals) deg += d.a == v || d.b == v;
  return deg;
}

/// All k-triangulations of the n-gon, via reduced pipe dreams of sigma_k.
inline std::vector<Triangulation> enumerate_triangulations(int n, int k, const Caps& caps = Caps::defaults()) {
  if (k < 1 || n < 2 * k + 1) throw Error(ErrorCode::OutOfRange, "need k >= 1 and n > 2k");
  if (n > caps.triangulation_n) throw Error(ErrorCode::TooLarge, "triangulation enumeration limited to n <= " + std::to_string(caps.triangulation_n));
  auto lambda = staircase_shape(n);
  auto dreams = enumerate_rp(sigma_k_ferrers(as_partition(lambda), k), caps);
  std::vector<Triangulation> out;
  for (const auto& d : dreams) out.push_back(detail::triangulation_from_marks(n, k, filling_from_pipe_dream(d, lambda).marks));
  std::sort(out.begin(), out.end());
  return out;
}

/// Interior points (t, t) of the diagonal met by the lowermost path.
inline std::vector<int> touch_points(const FanOfPaths& f) {
  auto d = to_dyck(f);
  std::vector<int> out;
  if (d.paths.empty()) return out;
  const auto& p = d.paths.front();
  const int ell = d.rows + 1;
  int x = 0, y = 0;
  for (char c : p) {
    (c == 'E' ? x : y)++;
    if (x == y && x > 0 && x < ell) out.push_back(x);
  }
  return out;
}

inline std::map<int, std::int64_t> degree_histogram(int n, int k, int v, const Caps& caps = Caps::defaults()) {
  if (v < 1 || v > n) throw Error(ErrorCode::OutOfRange, "vertex out of range");
  std::map<int, std::int64_t> h;
  for (const auto& t : enumerate_triangulations(n, k, caps)) ++h[degree(t, v)];
  return h;
}

// Where the formula's d comes from: the nontrivial degree itself, the total
// degree (2k forced neighbours added), or the nontrivial degree plus the two
// polygon sides at the vertex. The last one matches for every k tried; it
// agrees with total_degree when k = 1.
enum class DegreeConvention { nontrivial_degree, total_degree, polygon_edges };

inline std::string to_string(DegreeConvention c) {
  switch (c) {
    case DegreeConvention::nontrivial_degree: return "nontrivial_degree";
    case DegreeConvention::total_degree: return "total_degree";
    case DegreeConvention::polygon_edges: return "polygon_edges";
  }
  return "unknown";
}

inline int formula_argument(int deg, int k, DegreeConvention c) {
  switch (c) {
    case DegreeConvention::nontrivial_degree: return deg;
    case DegreeConvention::total_degree: return deg + 2 * k;
    case DegreeConvention::polygon_edges: return deg + 2;
  }
  return deg;
}

/// The ballot-type entry (2k+d-3)/l * C(2l-2k-d+2, l-1).
inline Rational ballot_entry(int ell, int k, int d) {
  if (ell < 1) throw Error(ErrorCode::OutOfRange, "index must be positive");
  Rational v(2 * k + d - 3);
  v /= ell;
  v *= binomial(2 * ell - 2 * k - d + 2, ell - 1);
  return v;
}

/// The k x k determinant with Catalan entries and a last column of ballot
/// entries, evaluated at d exactly as written.
inline Rational determinant_formula(int n, int k, int d) {
  if (k < 1 || n < 2 * k + 1) throw Error(ErrorCode::OutOfRange, "need k >= 1 and n > 2k");
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j < k; ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = catalan(n - 2 * k + i + j - 2);
    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] = ballot_entry(n - k - 2 + i, k, d);
  }
  return determinant(std::move(m));
}

/// Number of k-triangulations with nontrivial degree deg at a vertex, read
/// off the determinant under the given convention.
inline std::int64_t determinant_count(int n, int k, int deg,
                                      DegreeConvention convention = DegreeConvention::polygon_edges) {
  if (deg < 0) throw Error(ErrorCode::OutOfRange, "degree must be nonnegative");
  return to_int64(determinant_formula(n, k, formula_argument(deg, k, convention)));
}

/// True when the determinant reproduces the brute-force histogram at vertex 1
/// for every degree 0..n.
inline bool convention_matches(int n, int k, DegreeConvention c, const Caps& caps = Caps::defaults()) {
  auto h = degree_histogram(n, k, 1, caps);
  for (int deg = 0; deg <= n; ++deg) {
    auto it = h.find(deg);
    std::int64_t expected = it == h.end() ? 0 : it->second;
    if (determinant_formula(n, k, formula_argument(deg, k, c)) != expected) return false;
  }
  return true;
}

}  // namespace moonfill
