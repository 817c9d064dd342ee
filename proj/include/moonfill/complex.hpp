#pragma once

// The simplicial complex whose facets are the maximal k-NE fillings of a moon
// polyomino, its description as a subword complex, and decidable sphere
// checks (pseudomanifold, connectivity, Euler characteristic).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/shapes.hpp"

namespace moonfill {

struct SimplicialComplex {
  std::vector<BoxCoord> vertices;
  std::vector<std::vector<int>> facets;  // sorted vertex indices, facets sorted
};

inline SimplicialComplex build_complex(const Polyomino& m, int k, const Caps& caps = Caps::defaults()) {
  if (!m.at_least(ShapeClass::moon)) throw Error(ErrorCode::NotMoon, "shape is not a moon polyomino");
  SimplicialComplex c;
  c.vertices = m.boxes();
  for (const auto& f : enumerate_maximal_fillings_oracle(m, k, Direction::NE, caps)) {
    std::vector<int> facet;
    for (auto b : f.marks) facet.push_back(m.index_of(b));
    std::sort(facet.begin(), facet.end());
    c.facets.push_back(std::move(facet));
  }
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

/// Boxes in reading order: rows north to south, each row east to west.
inline std::vector<BoxCoord> reading_order(const Polyomino& m) {
  auto boxes = m.boxes();
  std::sort(boxes.begin(), boxes.end(), [](BoxCoord a, BoxCoord b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  return boxes;
}

/// Labels i+j-1 of the boxes, in reading order.
inline std::vector<int> subword_word(const Polyomino& m) {
  std::vector<int> w;
  for (auto b : reading_order(m)) w.push_back(b.row + b.col - 1);
  return w;
}

/// Facets of the subword complex of (word, s): complements of the position
/// sets that spell a reduced word for s. Positions are 0-based and sorted.
inline std::vector<std::vector<int>> subword_complex_facets(const std::vector<int>& word, const Permutation& s) {
  int n = s.size();
  for (int b : word) n = std::max(n, b + 1);
  const Permutation target = s.padded(n);
  const int len = length(target);
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::vector<int> w = Permutation::identity(n).oneline();
  // w must stay a prefix of target in weak order: l(w^{-1} target) = l(target) - l(w)
  auto prefix_ok = [&](int used) {
    std::vector<int> winv(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) winv[static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)] = i + 1;
    std::vector<int> rest(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) rest[static_cast<std::size_t>(i - 1)] = winv[static_cast<std::size_t>(target(i) - 1)];
    return length(Permutation(rest)) == len - used;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    const int used = static_cast<int>(chosen.size());
    if (used == len) {
      std::vector<int> facet;
      std::size_t c = 0;
      for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (c < chosen.size() && chosen[c] == i) ++c;
        else facet.push_back(i);
      }
      out.push_back(std::move(facet));
      return;
    }
    if (static_cast<int>(word.size() - pos) < len - used) return;
    // take word[pos]
    const auto b = static_cast<std::size_t>(word[pos]);
    std::swap(w[b - 1], w[b]);
    if (prefix_ok(used + 1)) {
      chosen.push_back(static_cast<int>(pos));
      rec(pos + 1);
      chosen.pop_back();
    }
    std::swap(w[b - 1], w[b]);
    rec(pos + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// The subword complex of (subword_word(m), s) re-expressed on the boxes of m.
inline SimplicialComplex subword_complex(const Polyomino& m, const Permutation& s) {
  auto order = reading_order(m);
  SimplicialComplex c;
  c.vertices = m.boxes();
  for (const auto& f : subword_complex_facets(subword_word(m), s)) {
    std::vector<int> facet;
    for (int pos : f) facet.push_back(m.index_of(order[static_cast<std::size_t>(pos)]));
    std::sort(facet.begin(), facet.end());
    c.facets.push_back(std::move(facet));
  }
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

struct SphereReport {
  std::size_t num_facets = 0;
  int facet_size = 0;
  std::vector<BoxCoord> cone_points;  // vertices in every facet
  bool cone_points_match_passive = true;
  int dimension = -1;                 // of the sphere part
  bool pseudomanifold = false;
  bool connected = false;
  std::int64_t euler_characteristic = 0;
  std::int64_t expected_euler = 0;
  bool euler_ok = false;
  bool ok() const { return cone_points_match_passive && pseudomanifold && connected && euler_ok; }
};

/// Removes the cone points, then checks the rest looks like a sphere.
/// `passive` (sorted), when given, must coincide with the cone points.
inline SphereReport sphere_checks(const SimplicialComplex& c, const std::vector<BoxCoord>* passive = nullptr) {
  if (c.facets.empty()) throw Error(ErrorCode::NotPure, "complex has no facets");
  const std::size_t size = c.facets.front().size();
  for (const auto& f : c.facets)
    if (f.size() != size) throw Error(ErrorCode::NotPure, "facets differ in size");
  if (c.vertices.size() > 64) throw Error(ErrorCode::TooLarge, "sphere checks limited to 64 vertices");

  SphereReport rep;
  rep.num_facets = c.facets.size();
  rep.facet_size = static_cast<int>(size);

  std::vector<int> in_all(c.vertices.size(), 0);
  for (const auto& f : c.facets)
    for (int v : f) ++in_all[static_cast<std::size_t>(v)];
  std::uint64_t cone = 0;
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    if (in_all[v] == static_cast<int>(c.facets.size())) {
      cone |= std::uint64_t{1} << v;
      rep.cone_points.push_back(c.vertices[v]);
    }
  std::sort(rep.cone_points.begin(), rep.cone_points.end());
  if (passive) rep.cone_points_match_passive = rep.cone_points == *passive;

  std::vector<std::uint64_t> facets;
  for (const auto& f : c.facets) {
    std::uint64_t mask = 0;
    for (int v : f) mask |= std::uint64_t{1} << v;
    facets.push_back(mask & ~cone);
  }
  const int fsize = static_cast<int>(size - rep.cone_points.size());
  rep.dimension = fsize - 1;
  if (fsize == 0) {
    // a single empty facet: the sphere part is degenerate
    rep.pseudomanifold = rep.connected = rep.euler_ok = facets.size() == 1;
    return rep;
  }

  // ridges and adjacency
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> ridges;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::uint64_t bits = facets[i]; bits; bits &= bits - 1) ridges[facets[i] & ~(bits & -bits)].push_back(i);
  rep.pseudomanifold = true;
  std::vector<std::vector<std::size_t>> adj(facets.size());
  for (const auto& [ridge, fs] : ridges) {
    if (fs.size() != 2) rep.pseudomanifold = false;
    for (std::size_t a = 0; a < fs.size(); ++a)
      for (std::size_t b = a + 1; b < fs.size(); ++b) {
        adj[fs[a]].push_back(fs[b]);
        adj[fs[b]].push_back(fs[a]);
      }
  }
  std::vector<char> seen(facets.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    auto i = q.front();
    q.pop();
    for (auto j : adj[i])
      if (!seen[j]) {
        seen[j] = 1;
        ++reached;
        q.push(j);
      }
  }
  rep.connected = reached == facets.size();

  // all nonempty faces
  std::unordered_set<std::uint64_t> faces;
  for (auto f : facets)
    for (std::uint64_t sub = f; sub; sub = (sub - 1) & f) faces.insert(sub);
  std::int64_t chi = 0;
  for (auto face : faces) chi += (__builtin_popcountll(face) % 2 == 1) ? 1 : -1;
  rep.euler_characteristic = chi;
  rep.expected_euler = 1 + (rep.dimension % 2 == 0 ? 1 : -1);
  rep.euler_ok = chi == rep.expected_euler;
  return rep;
}

}  // namespace moonfill
