#pragma once

// Reverse plane partitions, k-fans of noncrossing north-east paths, and the
// composed bijection from maximal k-NE fillings to maximal k-SE fillings of a
// Ferrers shape.
//
// Conventions. mu is lambda with its first k rows and columns removed; it has
// R rows and C = mu_1 columns. Path t of an RPP is the boundary of the region
// {entries < t}, drawn from the SW to the NE corner of the R x C box. Fans
// list paths lowermost first, so paths[i-1] is the boundary for t = k+1-i.
// For a staircase, Dyck form adds a leading N and a trailing E, giving Dyck
// paths of length 2(n-2k).

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/pipedreams.hpp"
#include "moonfill/shapes.hpp"
#include "moonfill/words.hpp"

namespace moonfill {

struct ReversePlanePartition {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    Partition p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return p;
  }
  int height() const {
    int h = 0;
    for (const auto& r : rows)
      for (int v : r) h = std::max(h, v);
    return h;
  }
  friend auto operator<=>(const ReversePlanePartition&, const ReversePlanePartition&) = default;
};

inline bool is_rpp(const ReversePlanePartition& r) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.rows[i].empty()) return false;
    if (i > 0 && r.rows[i].size() > r.rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < r.rows[i].size(); ++j) {
      if (r.rows[i][j] < 0) return false;
      if (j > 0 && r.rows[i][j] < r.rows[i][j - 1]) return false;
      if (i > 0 && r.rows[i][j] < r.rows[i - 1][j]) return false;
    }
  }
  return true;
}

struct FanOfPaths {
  int rows = 0;   // R
  int cols = 0;   // C
  bool dyck = false;
  std::vector<std::string> paths;  // over {N, E}, lowermost first

  friend auto operator<=>(const FanOfPaths&, const FanOfPaths&) = default;
};

/// lambda minus its first k rows and columns.
inline Partition inner_shape(const Partition& lambda, int k) {
  Partition mu;
  for (std::size_t i = static_cast<std::size_t>(std::max(k, 0)); i < lambda.size(); ++i)
    if (lambda[i] > k) mu.push_back(lambda[i] - k);
  return mu;
}

/// Subtract i from every entry of row i.
inline ReversePlanePartition rpp_from_flagged(const Tableau& q, int k) {
  if (!is_k_flagged(q, k)) throw Error(ErrorCode::NotFlagged, "tableau is not k-flagged");
  ReversePlanePartition r;
  for (std::size_t i = 0; i < q.rows.size(); ++i) {
    r.rows.emplace_back();
    for (int v : q.rows[i]) r.rows.back().push_back(v - static_cast<int>(i) - 1);
  }
  return r;
}

inline Tableau flagged_from_rpp(const ReversePlanePartition& r, int k) {
  if (!is_rpp(r)) throw Error(ErrorCode::InvalidInput, "not a reverse plane partition");
  if (r.height() > k) throw Error(ErrorCode::HeightExceeded, "entries exceed k");
  Tableau q;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    q.rows.emplace_back();
    for (int v : r.rows[i]) q.rows.back().push_back(v + static_cast<int>(i) + 1);
  }
  return q;
}

inline FanOfPaths fan_from_rpp(const ReversePlanePartition& r, int k) {
  if (!is_rpp(r)) throw Error(ErrorCode::InvalidInput, "not a reverse plane partition");
  if (r.height() > k) throw Error(ErrorCode::HeightExceeded, "entries exceed k");
  FanOfPaths f;
  f.rows = static_cast<int>(r.rows.size());
  f.cols = r.rows.empty() ? 0 : static_cast<int>(r.rows[0].size());
  for (int t = k; t >= 1; --t) {
    std::string path;
    int x = 0;
    for (std::size_t i = r.rows.size(); i-- > 0;) {
      int below_t = static_cast<int>(std::count_if(r.rows[i].begin(), r.rows[i].end(), [t](int v) { return v < t; }));
      path.append(static_cast<std::size_t>(below_t - x), 'E');
      x = below_t;
      path.push_back('N');
    }
    path.append(static_cast<std::size_t>(f.cols - x), 'E');
    f.paths.push_back(std::move(path));
  }
  return f;
}

inline FanOfPaths to_dyck(const FanOfPaths& f) {
  if (f.dyck) return f;
  if (f.rows != f.cols) throw Error(ErrorCode::InvalidInput, "Dyck form needs a square box");
  FanOfPaths d = f;
  d.dyck = true;
  for (auto& p : d.paths) p = "N" + p + "E";
  return d;
}

inline FanOfPaths from_dyck(const FanOfPaths& f) {
  if (!f.dyck) return f;
  FanOfPaths b = f;
  b.dyck = false;
  for (auto& p : b.paths) {
    if (p.size() < 2 || p.front() != 'N' || p.back() != 'E') throw Error(ErrorCode::InvalidInput, "not a completed Dyck path");
    p = p.substr(1, p.size() - 2);
  }
  return b;
}

/// Path-wise check: every path has R north and C east steps and lies weakly
/// above the path listed before it.
inline bool is_noncrossing_fan(const FanOfPaths& f) {
  auto bare = from_dyck(f);
  std::vector<int> prev;
  for (const auto& p : bare.paths) {
    if (std::count(p.begin(), p.end(), 'N') != bare.rows || std::count(p.begin(), p.end(), 'E') != bare.cols) return false;
    // x-coordinate of the north step at each height
    std::vector<int> xs;
    int x = 0;
    for (char c : p) {
      if (c == 'E') ++x;
      else if (c == 'N') xs.push_back(x);
      else return false;
    }
    if (!prev.empty())
      for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] > prev[i]) return false;
    prev = std::move(xs);
  }
  return true;
}

inline ReversePlanePartition rpp_from_fan(const FanOfPaths& fan, const Partition& mu, int k) {
  auto f = from_dyck(fan);
  if (static_cast<int>(f.paths.size()) != k) throw Error(ErrorCode::InvalidInput, "fan must hold k paths");
  const auto shape = trim_partition(mu);
  if (f.rows != static_cast<int>(shape.size()) || f.cols != (shape.empty() ? 0 : shape[0]))
    throw Error(ErrorCode::DoesNotFit, "fan box does not match the shape");
  if (!is_noncrossing_fan(f)) throw Error(ErrorCode::InvalidInput, "paths cross or have the wrong length");
  ReversePlanePartition r;
  for (int len : shape) r.rows.emplace_back(static_cast<std::size_t>(len), 0);
  for (int i = 1; i <= k; ++i) {
    // boundary for t = k+1-i: row widths of {entries < t}
    const auto& p = f.paths[static_cast<std::size_t>(i - 1)];
    std::vector<int> widths;
    int x = 0;
    for (char c : p) {
      if (c == 'E') ++x;
      else widths.push_back(x);
    }
    std::reverse(widths.begin(), widths.end());  // now top row first
    for (std::size_t row = 0; row < shape.size(); ++row) {
      if (widths[row] > shape[row]) throw Error(ErrorCode::DoesNotFit, "path leaves the shape");
      for (int c = widths[row]; c < shape[row]; ++c) ++r.rows[row][static_cast<std::size_t>(c)];
    }
  }
  return r;
}

/// Lifts path i (from the bottom) by i-1 and marks its boxes inside lambda,
/// then adds the boxes that lie on no SE chain of length k+1.
inline Filling se_filling_from_fan(const FanOfPaths& f, const Polyomino& lambda, int k) {
  if (!lambda.at_least(ShapeClass::ferrers)) throw Error(ErrorCode::NotFerrers, "shape is not a Ferrers shape");
  if (static_cast<int>(f.paths.size()) != k) throw Error(ErrorCode::InvalidInput, "fan must hold k paths");
  const bool degenerate = f.rows == 0;
  std::vector<BoxCoord> marks = passive_boxes(lambda, k, Direction::SE);
  for (int i = 1; i <= k; ++i) {
    const auto& p = f.paths[static_cast<std::size_t>(i - 1)];
    const int norths = static_cast<int>(std::count(p.begin(), p.end(), 'N'));
    BoxCoord b{k + norths - i + 1, k - i + 1};
    auto visit = [&](BoxCoord box) {
      if (lambda.contains(box)) marks.push_back(box);
      else if (!degenerate) throw Error(ErrorCode::DoesNotFit, "lifted path leaves the shape");
    };
    visit(b);
    for (char c : p) {
      if (c == 'N') --b.row;
      else ++b.col;
      visit(b);
    }
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  return Filling{lambda, std::move(marks)};
}

/// Inverse of se_filling_from_fan: on each diagonal col-row in [-R, C] the k
/// marks are the lifted path boxes, lowest path lowest.
inline FanOfPaths fan_from_se_filling(const Filling& g, int k, bool dyck) {
  const auto lambda = as_partition(g.shape);
  const auto mu = inner_shape(lambda, k);
  FanOfPaths f;
  f.rows = static_cast<int>(mu.size());
  f.cols = mu.empty() ? 0 : mu[0];
  if (f.rows == 0) {
    f.paths.assign(static_cast<std::size_t>(k), "");
  } else {
    std::map<int, std::vector<BoxCoord>> diag;
    for (auto b : g.marks) {
      int d = b.col - b.row;
      if (d >= -f.rows && d <= f.cols) diag[d].push_back(b);
    }
    std::vector<std::vector<BoxCoord>> lifted(static_cast<std::size_t>(k));
    for (int d = -f.rows; d <= f.cols; ++d) {
      auto& boxes = diag[d];
      if (static_cast<int>(boxes.size()) != k)
        throw Error(ErrorCode::Inconsistent, "diagonal does not carry exactly k path boxes");
      std::sort(boxes.begin(), boxes.end(), [](BoxCoord a, BoxCoord b) { return a.row > b.row; });
      for (int i = 0; i < k; ++i) lifted[static_cast<std::size_t>(i)].push_back(boxes[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i <= k; ++i) {
      const auto& boxes = lifted[static_cast<std::size_t>(i - 1)];
      if (boxes.front() != BoxCoord{k + f.rows - i + 1, k - i + 1})
        throw Error(ErrorCode::Inconsistent, "path does not start at its lifted corner");
      std::string p;
      for (std::size_t s = 1; s < boxes.size(); ++s) {
        BoxCoord a = boxes[s - 1], b = boxes[s];
        if (b.row == a.row - 1 && b.col == a.col) p.push_back('N');
        else if (b.row == a.row && b.col == a.col + 1) p.push_back('E');
        else throw Error(ErrorCode::Inconsistent, "path boxes are not adjacent");
      }
      f.paths.push_back(std::move(p));
    }
  }
  if (!is_noncrossing_fan(f)) throw Error(ErrorCode::Inconsistent, "recovered paths cross");
  if (se_filling_from_fan(f, g.shape, k).marks != g.marks)
    throw Error(ErrorCode::Inconsistent, "filling is not the image of a fan");
  return dyck && f.rows > 0 ? to_dyck(f) : f;
}

/// Every intermediate object of the NE-to-SE map.
struct BijectionTrace {
  Filling ne;
  PipeDream pipe_dream;
  Biword biword;
  Tableau p;
  Tableau q;
  ReversePlanePartition rpp;
  FanOfPaths fan;
  Filling se;
};

inline bool is_staircase_shape(const Polyomino& lambda) {
  return lambda.at_least(ShapeClass::ferrers) && lambda == staircase_shape(staircase_size(lambda));
}

inline BijectionTrace ne_to_se_trace(const Filling& f, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
  const auto lambda = as_partition(f.shape);
  const int n = staircase_size(f.shape);
  BijectionTrace tr;
  tr.ne = f;
  tr.pipe_dream = complementary_map(f, n);
  if (!is_reduced(tr.pipe_dream)) throw Error(ErrorCode::NotReduced, "complement is not a reduced pipe dream");
  if (!same_up_to_padding(wiring_permutation(tr.pipe_dream), sigma_k_ferrers(lambda, k)))
    throw Error(ErrorCode::Inconsistent, "filling is not a maximal k-NE filling");
  tr.biword = reading_biword(tr.pipe_dream);
  auto ins = eg_insert(tr.biword);
  tr.p = std::move(ins.p);
  tr.q = std::move(ins.q);
  if (tr.q.shape() != inner_shape(lambda, k)) throw Error(ErrorCode::Inconsistent, "recording tableau has the wrong shape");
  tr.rpp = rpp_from_flagged(tr.q, k);
  tr.fan = fan_from_rpp(tr.rpp, k);
  if (is_staircase_shape(f.shape) && tr.fan.rows > 0) tr.fan = to_dyck(tr.fan);
  tr.se = se_filling_from_fan(tr.fan, f.shape, k);
  return tr;
}

inline Filling ne_to_se(const Filling& f, int k) { return ne_to_se_trace(f, k).se; }

inline Filling se_to_ne(const Filling& g, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
  const auto lambda = as_partition(g.shape);
  const int n = staircase_size(g.shape);
  auto fan = fan_from_se_filling(g, k, false);
  auto rpp = rpp_from_fan(fan, inner_shape(lambda, k), k);
  auto q = flagged_from_rpp(rpp, k);
  auto t = eg_inverse(q, sigma_k_ferrers(lambda, k));
  auto d = pipe_dream_from_biword(t, n);
  return filling_from_pipe_dream(d, g.shape);
}

}  // namespace moonfill
