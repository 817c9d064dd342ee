#pragma once

// Polyomino geometry: boxes, shape classes, maximal rectangles, north-east and
// south-east chains, and the brute-force oracle for maximal chain-avoiding
// fillings.
//
// Coordinates are matrix style and 1-based: row 1 is the northmost row and
// column 1 the westmost column. "North-east" therefore means a smaller row and
// a larger column.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "moonfill/error.hpp"

namespace moonfill {

struct BoxCoord {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

/// Row lengths of a Ferrers shape, north to south.
using Partition = std::vector<int>;

enum class ShapeClass { general = 0, moon = 1, stack = 2, ferrers = 3 };

enum class Direction { NE, SE };

constexpr std::string_view to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::general: return "general";
    case ShapeClass::moon: return "moon";
    case ShapeClass::stack: return "stack";
    case ShapeClass::ferrers: return "ferrers";
  }
  return "general";
}

struct Rectangle {
  BoxCoord nw;
  BoxCoord se;

  int height() const { return se.row - nw.row + 1; }
  int width() const { return se.col - nw.col + 1; }

  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

class Polyomino;
Polyomino classify(std::vector<BoxCoord> boxes);

/// A finite NW-justified set of boxes together with its strongest shape class.
/// Construct through `classify`, `normalize`, `ferrers_shape` or
/// `staircase_shape`.
class Polyomino {
 public:
  Polyomino() = default;

  const std::vector<BoxCoord>& boxes() const { return boxes_; }
  std::size_t size() const { return boxes_.size(); }
  ShapeClass shape_class() const { return class_; }
  bool at_least(ShapeClass c) const { return static_cast<int>(class_) >= static_cast<int>(c); }
  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }

  bool contains(BoxCoord b) const { return index_of(b) >= 0; }

  /// Position of `b` in `boxes()`, or -1.
  int index_of(BoxCoord b) const {
    if (b.row < 1 || b.col < 1 || b.row > rows_ || b.col > cols_) return -1;
    return index_[static_cast<std::size_t>((b.row - 1) * cols_ + (b.col - 1))];
  }

  /// True iff every box of the rectangle rows [r1,r2] x cols [c1,c2] is in the shape.
  bool contains_rectangle(int r1, int c1, int r2, int c2) const {
    if (r1 > r2 || c1 > c2) return true;
    if (r1 < 1 || c1 < 1 || r2 > rows_ || c2 > cols_) return false;
    long area = static_cast<long>(r2 - r1 + 1) * (c2 - c1 + 1);
    return prefix(r2, c2) - prefix(r1 - 1, c2) - prefix(r2, c1 - 1) + prefix(r1 - 1, c1 - 1) == area;
  }

  /// Number of boxes in each row, north to south.
  std::vector<int> row_lengths() const {
    std::vector<int> out(static_cast<std::size_t>(rows_), 0);
    for (auto b : boxes_) ++out[static_cast<std::size_t>(b.row - 1)];
    return out;
  }

  /// Number of boxes in each column, west to east.
  std::vector<int> column_heights() const {
    std::vector<int> out(static_cast<std::size_t>(cols_), 0);
    for (auto b : boxes_) ++out[static_cast<std::size_t>(b.col - 1)];
    return out;
  }

  friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.boxes_ == b.boxes_; }

 private:
  friend Polyomino classify(std::vector<BoxCoord> boxes);

  long prefix(int r, int c) const {
    if (r <= 0 || c <= 0) return 0;
    return prefix_[static_cast<std::size_t>(r * (cols_ + 1) + c)];
  }

  std::vector<BoxCoord> boxes_;
  ShapeClass class_ = ShapeClass::general;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> index_;
  std::vector<long> prefix_;
};

/// Sorts, deduplicates and classifies a NW-justified box set.
inline Polyomino classify(std::vector<BoxCoord> boxes) {
  if (boxes.empty()) throw Error(ErrorCode::EmptyShape, "polyomino has no boxes");
  for (auto b : boxes)
    if (b.row < 1 || b.col < 1) throw Error(ErrorCode::InvalidInput, "box coordinates must be positive");
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());

  bool has_row1 = false, has_col1 = false;
  int rows = 0, cols = 0;
  for (auto b : boxes) {
    has_row1 |= b.row == 1;
    has_col1 |= b.col == 1;
    rows = std::max(rows, b.row);
    cols = std::max(cols, b.col);
  }
  if (!has_row1 || !has_col1) throw Error(ErrorCode::NotJustified, "no box in row 1 or in column 1");

  Polyomino p;
  p.boxes_ = std::move(boxes);
  p.rows_ = rows;
  p.cols_ = cols;
  p.index_.assign(static_cast<std::size_t>(rows * cols), -1);
  for (std::size_t i = 0; i < p.boxes_.size(); ++i) {
    auto b = p.boxes_[i];
    p.index_[static_cast<std::size_t>((b.row - 1) * cols + (b.col - 1))] = static_cast<int>(i);
  }
  p.prefix_.assign(static_cast<std::size_t>((rows + 1) * (cols + 1)), 0);
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c)
      p.prefix_[static_cast<std::size_t>(r * (cols + 1) + c)] =
          (p.contains({r, c}) ? 1 : 0) + p.prefix(r - 1, c) + p.prefix(r, c - 1) - p.prefix(r - 1, c - 1);

  // Row and column extents; an empty row or column inside the bounding box
  // already breaks convexity of the neighbouring lines.
  struct Extent {
    int lo = 0, hi = -1, count = 0;
  };
  std::vector<Extent> row_ext(static_cast<std::size_t>(rows + 1)), col_ext(static_cast<std::size_t>(cols + 1));
  for (auto b : p.boxes_) {
    auto& re = row_ext[static_cast<std::size_t>(b.row)];
    re.lo = re.count ? std::min(re.lo, b.col) : b.col;
    re.hi = re.count ? std::max(re.hi, b.col) : b.col;
    ++re.count;
    auto& ce = col_ext[static_cast<std::size_t>(b.col)];
    ce.lo = ce.count ? std::min(ce.lo, b.row) : b.row;
    ce.hi = ce.count ? std::max(ce.hi, b.row) : b.row;
    ++ce.count;
  }
  auto convex_lines = [](const std::vector<Extent>& ext) {
    for (std::size_t i = 1; i < ext.size(); ++i)
      if (ext[i].count == 0 || ext[i].hi - ext[i].lo + 1 != ext[i].count) return false;
    return true;
  };
  auto nested = [](const std::vector<Extent>& ext) {
    for (std::size_t i = 1; i < ext.size(); ++i)
      for (std::size_t j = i + 1; j < ext.size(); ++j) {
        bool i_in_j = ext[j].lo <= ext[i].lo && ext[i].hi <= ext[j].hi;
        bool j_in_i = ext[i].lo <= ext[j].lo && ext[j].hi <= ext[i].hi;
        if (!i_in_j && !j_in_i) return false;
      }
    return true;
  };

  p.class_ = ShapeClass::general;
  if (convex_lines(row_ext) && convex_lines(col_ext) && nested(col_ext) && nested(row_ext)) {
    p.class_ = ShapeClass::moon;
    bool stack = std::all_of(col_ext.begin() + 1, col_ext.end(), [](const Extent& e) { return e.lo == 1; });
    if (stack) {
      p.class_ = ShapeClass::stack;
      bool left = std::all_of(row_ext.begin() + 1, row_ext.end(), [](const Extent& e) { return e.lo == 1; });
      if (left) p.class_ = ShapeClass::ferrers;
    }
  }
  return p;
}

/// Translates a box set so that it touches row 1 and column 1, then classifies.
inline Polyomino normalize(std::vector<BoxCoord> boxes) {
  if (boxes.empty()) throw Error(ErrorCode::EmptyShape, "polyomino has no boxes");
  int min_r = boxes.front().row, min_c = boxes.front().col;
  for (auto b : boxes) {
    min_r = std::min(min_r, b.row);
    min_c = std::min(min_c, b.col);
  }
  for (auto& b : boxes) {
    b.row -= min_r - 1;
    b.col -= min_c - 1;
  }
  return classify(std::move(boxes));
}

inline Partition trim_partition(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline Polyomino ferrers_shape(const Partition& rows) {
  if (!is_partition(rows)) throw Error(ErrorCode::InvalidInput, "row lengths must be weakly decreasing and nonnegative");
  std::vector<BoxCoord> boxes;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 1; c <= rows[r]; ++c) boxes.push_back({static_cast<int>(r) + 1, c});
  return classify(std::move(boxes));
}

/// The staircase (n-1, ..., 2, 1).
inline Polyomino staircase_shape(int n) {
  if (n < 2) throw Error(ErrorCode::EmptyShape, "staircase needs n >= 2");
  Partition rows;
  for (int r = n - 1; r >= 1; --r) rows.push_back(r);
  return ferrers_shape(rows);
}

inline Partition as_partition(const Polyomino& lambda) {
  if (!lambda.at_least(ShapeClass::ferrers)) throw Error(ErrorCode::NotFerrers, "shape is not a Ferrers shape");
  return lambda.row_lengths();
}

/// Smallest n such that the shape lies in the staircase (n-1, ..., 1).
inline int staircase_size(const Polyomino& m) {
  int n = 1;
  for (auto b : m.boxes()) n = std::max(n, b.row + b.col);
  return n;
}

inline int staircase_size(const Partition& rows) {
  int n = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] > 0) n = std::max(n, rows[i] + static_cast<int>(i) + 1);
  return n;
}

// ---------------------------------------------------------------------------
// Fillings

struct Filling {
  Polyomino shape;
  std::vector<BoxCoord> marks;  // sorted, subset of shape.boxes()

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.shape == b.shape && a.marks == b.marks;
  }
};

inline Filling make_filling(Polyomino shape, std::vector<BoxCoord> marks) {
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  for (auto b : marks)
    if (!shape.contains(b))
      throw Error(ErrorCode::InvalidInput,
                  "mark (" + std::to_string(b.row) + "," + std::to_string(b.col) + ") outside the shape");
  return Filling{std::move(shape), std::move(marks)};
}

// ---------------------------------------------------------------------------
// Rectangles and chains

/// Inclusion-maximal rectangles of a moon polyomino, sorted by (nw, se).
inline std::vector<Rectangle> maximal_rectangles(const Polyomino& m) {
  if (!m.at_least(ShapeClass::moon)) throw Error(ErrorCode::NotMoon, "maximal rectangles need a moon polyomino");
  std::set<Rectangle> found;
  for (auto nw : m.boxes()) {
    for (int r2 = nw.row; m.contains({r2, nw.col}); ++r2) {
      for (int c2 = nw.col; m.contains_rectangle(nw.row, nw.col, r2, c2); ++c2) {
        int r1 = nw.row, c1 = nw.col;
        bool maximal = !m.contains_rectangle(r1 - 1, c1, r1 - 1, c2) && !m.contains_rectangle(r2 + 1, c1, r2 + 1, c2) &&
                       !m.contains_rectangle(r1, c1 - 1, r2, c1 - 1) && !m.contains_rectangle(r1, c2 + 1, r2, c2 + 1);
        // contains_rectangle treats out-of-range lines as absent
        if (maximal) found.insert(Rectangle{{r1, c1}, {r2, c2}});
      }
    }
  }
  return {found.begin(), found.end()};
}

inline bool chain_step(BoxCoord from, BoxCoord to, Direction dir) {
  if (dir == Direction::NE) return to.row < from.row && to.col > from.col;
  return to.row > from.row && to.col > from.col;
}

/// Bounding rectangle of a monotone chain given by its first and last box.
inline bool chain_rectangle_inside(const Polyomino& shape, BoxCoord first, BoxCoord last, Direction dir) {
  if (dir == Direction::NE) return shape.contains_rectangle(last.row, first.col, first.row, last.col);
  return shape.contains_rectangle(first.row, first.col, last.row, last.col);
}

/// Length of the longest chain of marks in the given direction whose bounding
/// rectangle lies in the shape.
inline int max_chain_length(const Filling& f, Direction dir) {
  const auto& marks = f.marks;
  const std::size_t m = marks.size();
  if (m == 0) return 0;
  // Order marks so that every chain step moves forward: by column.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return marks[a].col < marks[b].col; });
  int best = 1;
  std::vector<int> len(m);
  for (std::size_t si = 0; si < m; ++si) {
    auto s = marks[order[si]];
    std::fill(len.begin(), len.end(), 0);
    len[si] = 1;
    for (std::size_t ei = si + 1; ei < m; ++ei) {
      auto e = marks[order[ei]];
      if (!chain_step(s, e, dir)) continue;
      for (std::size_t xi = si; xi < ei; ++xi)
        if (len[xi] > 0 && (xi == si || chain_step(marks[order[xi]], e, dir)))
          len[ei] = std::max(len[ei], len[xi] + 1);
      if (len[ei] > best && chain_rectangle_inside(f.shape, s, e, dir)) best = len[ei];
    }
  }
  return best;
}

/// All chains of exactly `length` boxes of `m` in direction `dir` whose
/// bounding rectangle lies in `m`, as lists of box indices.
inline std::vector<std::vector<int>> chains_of_length(const Polyomino& m, int length, Direction dir) {
  std::vector<std::vector<int>> out;
  if (length <= 0) return out;
  const auto& boxes = m.boxes();
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int last) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    BoxCoord first = boxes[static_cast<std::size_t>(cur.front())];
    for (std::size_t j = 0; j < boxes.size(); ++j) {
      if (!chain_step(boxes[static_cast<std::size_t>(last)], boxes[j], dir)) continue;
      if (!chain_rectangle_inside(m, first, boxes[j], dir)) continue;
      cur.push_back(static_cast<int>(j));
      extend(static_cast<int>(j));
      cur.pop_back();
    }
  };
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    cur = {static_cast<int>(i)};
    extend(static_cast<int>(i));
  }
  return out;
}

/// Boxes of `m` lying on no chain of length k+1 in direction `dir`.
inline std::vector<BoxCoord> passive_boxes(const Polyomino& m, int k, Direction dir = Direction::NE) {
  if (!m.at_least(ShapeClass::moon)) throw Error(ErrorCode::NotMoon, "passive boxes need a moon polyomino");
  std::vector<char> active(m.size(), 0);
  for (const auto& chain : chains_of_length(m, k + 1, dir))
    for (int i : chain) active[static_cast<std::size_t>(i)] = 1;
  std::vector<BoxCoord> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!active[i]) out.push_back(m.boxes()[i]);
  return out;
}

/// Brute-force enumeration of all inclusion-maximal mark sets of `m` with no
/// chain of length k+1 in direction `dir`. Results are sorted by marks.
inline std::vector<Filling> enumerate_maximal_fillings_oracle(const Polyomino& m, int k, Direction dir,
                                                              const Caps& caps = Caps::defaults()) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
  const int cap = std::min(caps.oracle_boxes, 64);
  if (static_cast<int>(m.size()) > cap)
    throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(cap) + " boxes");
  using Mask = std::uint64_t;
  const std::size_t nb = m.size();
  std::vector<std::vector<Mask>> edges_of(nb);
  for (const auto& chain : chains_of_length(m, k + 1, dir)) {
    Mask e = 0;
    for (int i : chain) e |= Mask{1} << i;
    for (int i : chain) edges_of[static_cast<std::size_t>(i)].push_back(e);
  }

  Mask inc = 0, dec = 0;
  std::vector<Mask> results;
  std::vector<std::size_t> excluded;

  auto blocked = [&](std::size_t i) {  // adding i would complete a chain
    Mask bi = Mask{1} << i;
    for (Mask e : edges_of[i])
      if (((e & ~bi) & ~inc) == 0) return true;
    return false;
  };
  auto may_be_blocked = [&](std::size_t i) {  // some chain through i avoids excluded boxes
    Mask bi = Mask{1} << i;
    Mask out = dec & ~inc;
    for (Mask e : edges_of[i])
      if (((e & ~bi) & out) == 0) return true;
    return false;
  };

  std::function<void(std::size_t)> search = [&](std::size_t pos) {
    if (pos == nb) {
      results.push_back(inc);
      return;
    }
    Mask bit = Mask{1} << pos;
    if (!blocked(pos)) {
      inc |= bit;
      dec |= bit;
      search(pos + 1);
      inc &= ~bit;
      dec &= ~bit;
    }
    if (edges_of[pos].empty()) return;  // passive: always included
    dec |= bit;
    excluded.push_back(pos);
    bool ok = true;
    for (std::size_t j : excluded)
      if (!may_be_blocked(j)) {
        ok = false;
        break;
      }
    if (ok) search(pos + 1);
    excluded.pop_back();
    dec &= ~bit;
  };
  search(0);

  std::vector<Filling> out;
  out.reserve(results.size());
  for (Mask r : results) {
    std::vector<BoxCoord> marks;
    for (std::size_t i = 0; i < nb; ++i)
      if (r & (Mask{1} << i)) marks.push_back(m.boxes()[i]);
    out.push_back(Filling{m, std::move(marks)});
  }
  std::sort(out.begin(), out.end(), [](const Filling& a, const Filling& b) { return a.marks < b.marks; });
  if (m.at_least(ShapeClass::moon)) {
    for (const auto& f : out)
      if (f.marks.size() != out.front().marks.size())
        throw Error(ErrorCode::Inconsistent, "maximal fillings of a moon polyomino differ in size");
  }
  return out;
}

/// Rearranges the columns of a stack polyomino into weakly decreasing heights.
inline Polyomino stack_to_ferrers(const Polyomino& s) {
  if (!s.at_least(ShapeClass::stack)) throw Error(ErrorCode::NotStack, "shape is not a stack polyomino");
  auto heights = s.column_heights();
  std::sort(heights.begin(), heights.end(), std::greater<>());
  std::vector<BoxCoord> boxes;
  for (std::size_t c = 0; c < heights.size(); ++c)
    for (int r = 1; r <= heights[c]; ++r) boxes.push_back({r, static_cast<int>(c) + 1});
  return classify(std::move(boxes));
}

// ---------------------------------------------------------------------------
// Shape generators used by the exhaustive suites

/// All nonempty Ferrers shapes contained in the staircase (n-1, ..., 1).
inline std::vector<Partition> partitions_in_staircase(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int row, int bound) {
    if (!cur.empty()) out.push_back(cur);
    int limit = std::min(bound, n - row);
    for (int len = 1; len <= limit; ++len) {
      cur.push_back(len);
      rec(row + 1, len);
      cur.pop_back();
    }
  };
  rec(1, n - 1);
  return out;
}

/// All stack polyominoes fitting in a `height` x `width` box.
inline std::vector<Polyomino> stacks_in_box(int height, int width) {
  std::vector<Polyomino> out;
  std::vector<int> heights;
  std::function<void()> rec = [&]() {
    if (!heights.empty()) {
      std::vector<BoxCoord> boxes;
      for (std::size_t c = 0; c < heights.size(); ++c)
        for (int r = 1; r <= heights[c]; ++r) boxes.push_back({r, static_cast<int>(c) + 1});
      auto p = classify(std::move(boxes));
      if (p.at_least(ShapeClass::stack)) out.push_back(std::move(p));
    }
    if (static_cast<int>(heights.size()) == width) return;
    for (int h = 1; h <= height; ++h) {
      heights.push_back(h);
      rec();
      heights.pop_back();
    }
  };
  rec();
  return out;
}

/// All NW-justified moon polyominoes with at most `max_area` boxes.
inline std::vector<Polyomino> moon_polyominoes(int max_area) {
  struct Col {
    int top, bottom;
  };
  std::vector<Polyomino> out;
  std::vector<Col> cols;
  // Rows are bounded by the area; a column is an interval [top, bottom].
  std::function<void(int)> rec = [&](int area) {
    if (!cols.empty()) {
      int min_top = cols.front().top;
      for (auto c : cols) min_top = std::min(min_top, c.top);
      if (min_top == 1) {
        std::vector<BoxCoord> boxes;
        for (std::size_t c = 0; c < cols.size(); ++c)
          for (int r = cols[c].top; r <= cols[c].bottom; ++r) boxes.push_back({r, static_cast<int>(c) + 1});
        auto p = classify(std::move(boxes));
        if (p.at_least(ShapeClass::moon)) out.push_back(std::move(p));
      }
    }
    for (int top = 1; top <= max_area - area; ++top)
      for (int bottom = top; bottom - top + 1 <= max_area - area; ++bottom) {
        bool ok = true;
        for (auto c : cols) {
          bool nested = (c.top <= top && bottom <= c.bottom) || (top <= c.top && c.bottom <= bottom);
          if (!nested) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (!cols.empty()) {
          // a row that left the shape may not come back
          const Col prev = cols.back();
          for (std::size_t c = 0; c + 1 < cols.size() && ok; ++c) {
            for (int r = std::max(top, cols[c].top); r <= std::min(bottom, cols[c].bottom); ++r)
              if (r < prev.top || r > prev.bottom) {
                ok = false;
                break;
              }
          }
          // consecutive columns must share a row
          if (ok && (bottom < prev.top || top > prev.bottom)) ok = false;
          if (!ok) continue;
        }
        cols.push_back({top, bottom});
        rec(area + bottom - top + 1);
        cols.pop_back();
      }
  };
  rec(0);
  return out;
}

}  // namespace moonfill
