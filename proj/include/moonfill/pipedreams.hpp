#pragma once

// Pipe dreams on the staircase (n-1, ..., 1): wiring, reducedness,
// enumeration of reduced pipe dreams, the complementary map to fillings, and
// mutation.
//
// Pipe j enters at the top of column j. A crossing box passes a pipe straight
// through; an elbow box sends the pipe entering from the top out to the left
// and the pipe entering from the right out at the bottom. Boxes (i, j) with
// i + j = n + 1 are the terminal hooks and always elbows.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/shapes.hpp"

namespace moonfill {

struct PipeDream {
  int n = 1;
  std::vector<BoxCoord> crossings;  // sorted, each with row + col <= n

  bool is_crossing(BoxCoord b) const { return std::binary_search(crossings.begin(), crossings.end(), b); }

  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
};

inline PipeDream make_pipe_dream(int n, std::vector<BoxCoord> crossings) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "board size must be positive");
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
  for (auto b : crossings)
    if (b.row < 1 || b.col < 1 || b.row + b.col > n)
      throw Error(ErrorCode::NotInStaircase, "crossing outside the staircase of size " + std::to_string(n));
  return PipeDream{n, std::move(crossings)};
}

/// Result of following every pipe through the board.
struct PipeTrace {
  int n = 0;
  std::vector<int> exit_row;  // exit_row[j-1]: left-edge row reached by pipe j
  std::vector<int> turns;     // turns[j-1]: elbow boxes visited by pipe j
  std::vector<int> from_top;    // pipe entering box (r,c) from the top, row-major (n+1)^2 grid
  std::vector<int> from_right;  // pipe entering box (r,c) from the right
  std::map<std::pair<int, int>, std::vector<BoxCoord>> pair_crossings;  // (low pipe, high pipe)

  int at(const std::vector<int>& grid, BoxCoord b) const {
    return grid[static_cast<std::size_t>(b.row * (n + 1) + b.col)];
  }
};

inline PipeTrace trace_pipes(const PipeDream& d) {
  const int n = d.n;
  PipeTrace t;
  t.n = n;
  t.exit_row.assign(static_cast<std::size_t>(n), 0);
  t.turns.assign(static_cast<std::size_t>(n), 0);
  t.from_top.assign(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  t.from_right.assign(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  std::vector<char> cross(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  for (auto b : d.crossings) cross[static_cast<std::size_t>(b.row * (n + 1) + b.col)] = 1;

  for (int pipe = 1; pipe <= n; ++pipe) {
    int r = 1, c = pipe;
    bool entering_from_top = true;
    while (c >= 1) {
      auto idx = static_cast<std::size_t>(r * (n + 1) + c);
      (entering_from_top ? t.from_top : t.from_right)[idx] = pipe;
      bool is_cross = r + c <= n && cross[idx];
      if (is_cross) {
        if (entering_from_top) ++r;
        else --c;
      } else {
        ++t.turns[static_cast<std::size_t>(pipe - 1)];
        if (entering_from_top) {
          --c;
          entering_from_top = false;
        } else {
          ++r;
          entering_from_top = true;
        }
      }
    }
    t.exit_row[static_cast<std::size_t>(pipe - 1)] = r;
  }
  for (auto b : d.crossings) {
    int p = t.at(t.from_top, b), q = t.at(t.from_right, b);
    t.pair_crossings[{std::min(p, q), std::max(p, q)}].push_back(b);
  }
  return t;
}

/// pi(D): the pipe reaching row i of the left edge is pipe pi(i).
inline Permutation wiring_permutation(const PipeDream& d) {
  auto t = trace_pipes(d);
  std::vector<int> w(static_cast<std::size_t>(d.n), 0);
  for (int pipe = 1; pipe <= d.n; ++pipe) w[static_cast<std::size_t>(t.exit_row[static_cast<std::size_t>(pipe - 1)] - 1)] = pipe;
  return Permutation(std::move(w));
}

/// True iff no two pipes cross twice.
inline bool is_reduced(const PipeDream& d) {
  auto t = trace_pipes(d);
  for (const auto& [pair, boxes] : t.pair_crossings)
    if (boxes.size() > 1) return false;
  return true;
}

namespace detail {

/// Walks every compatible sequence of `s` from its last column backwards,
/// keeping only columns whose box (a, b - a + 1) passes `allowed`.
/// Calls `emit` with the columns in reading order.
inline void for_each_compatible_sequence(const Permutation& s, const std::function<bool(BoxCoord)>& allowed,
                                         const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  std::vector<int> w = s.oneline();
  const int n = static_cast<int>(w.size());
  int remaining = length(s);
  std::vector<std::pair<int, int>> rev;  // columns, last first
  std::function<void(int, int)> rec = [&](int next_a, int next_b) {
    if (remaining == 0) {
      std::vector<std::pair<int, int>> cols(rev.rbegin(), rev.rend());
      emit(cols);
      return;
    }
    for (int b = 1; b < n; ++b) {
      if (w[static_cast<std::size_t>(b - 1)] < w[static_cast<std::size_t>(b)]) continue;  // not a right descent
      for (int a = std::min(b, next_a); a >= 1; --a) {
        if (a == next_a && b <= next_b) continue;
        if (!allowed({a, b - a + 1})) continue;
        std::swap(w[static_cast<std::size_t>(b - 1)], w[static_cast<std::size_t>(b)]);
        --remaining;
        rev.emplace_back(a, b);
        rec(a, b);
        rev.pop_back();
        ++remaining;
        std::swap(w[static_cast<std::size_t>(b - 1)], w[static_cast<std::size_t>(b)]);
      }
    }
  };
  rec(n, 0);
}

inline std::vector<PipeDream> enumerate_rp_filtered(const Permutation& s, const std::function<bool(BoxCoord)>& allowed,
                                                    const Caps& caps) {
  if (length(s) > caps.pipe_dream_length)
    throw Error(ErrorCode::TooLarge, "pipe dream enumeration limited to length " + std::to_string(caps.pipe_dream_length));
  std::vector<PipeDream> out;
  const int n = std::max(s.size(), 1);
  for_each_compatible_sequence(s, allowed, [&](const std::vector<std::pair<int, int>>& cols) {
    std::vector<BoxCoord> boxes;
    boxes.reserve(cols.size());
    for (auto [a, b] : cols) boxes.push_back({a, b - a + 1});
    std::sort(boxes.begin(), boxes.end());
    out.push_back(PipeDream{n, std::move(boxes)});
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All reduced pipe dreams with wiring permutation s, sorted.
inline std::vector<PipeDream> enumerate_rp(const Permutation& s, const Caps& caps = Caps::defaults()) {
  return detail::enumerate_rp_filtered(s, [](BoxCoord) { return true; }, caps);
}

/// Reduced pipe dreams of s whose crossings all lie in m.
inline std::vector<PipeDream> enumerate_rp_in(const Permutation& s, const Polyomino& m, const Caps& caps = Caps::defaults()) {
  return detail::enumerate_rp_filtered(s, [&](BoxCoord b) { return m.contains(b); }, caps);
}

/// Crossings are the unmarked boxes of the filling; the rest of the staircase
/// is elbows.
inline PipeDream complementary_map(const Filling& f, int n) {
  std::vector<BoxCoord> crossings;
  for (auto b : f.shape.boxes()) {
    if (b.row + b.col > n) throw Error(ErrorCode::NotInStaircase, "shape does not fit the staircase of size " + std::to_string(n));
    if (!std::binary_search(f.marks.begin(), f.marks.end(), b)) crossings.push_back(b);
  }
  return PipeDream{n, std::move(crossings)};
}

/// Inverse of the complementary map for a given shape.
inline Filling filling_from_pipe_dream(const PipeDream& d, const Polyomino& shape) {
  for (auto b : d.crossings)
    if (!shape.contains(b)) throw Error(ErrorCode::CrossingOutsideShape, "crossing outside the shape");
  std::vector<BoxCoord> marks;
  for (auto b : shape.boxes())
    if (!d.is_crossing(b)) marks.push_back(b);
  return Filling{shape, std::move(marks)};
}

struct Mutation {
  PipeDream result;
  BoxCoord released;  // the former crossing of the two pipes, now an elbow
};

/// Turns the elbow at b into a crossing and the unique other crossing of the
/// two pipes meeting at b into an elbow.
inline Mutation mutate(const PipeDream& d, BoxCoord b) {
  if (b.row < 1 || b.col < 1 || b.row + b.col > d.n) throw Error(ErrorCode::NotInStaircase, "box outside the staircase");
  if (d.is_crossing(b)) throw Error(ErrorCode::BoxIsCrossing, "box already holds a crossing");
  auto t = trace_pipes(d);
  int p = t.at(t.from_top, b), q = t.at(t.from_right, b);
  auto it = t.pair_crossings.find({std::min(p, q), std::max(p, q)});
  if (p == 0 || q == 0 || it == t.pair_crossings.end() || it->second.size() != 1)
    throw Error(ErrorCode::NotMutable, "the two pipes at this box never cross");
  BoxCoord released = it->second.front();
  std::vector<BoxCoord> crossings;
  for (auto c : d.crossings)
    if (c != released) crossings.push_back(c);
  crossings.push_back(b);
  std::sort(crossings.begin(), crossings.end());
  return Mutation{PipeDream{d.n, std::move(crossings)}, released};
}

/// Elbow boxes visited by each pipe (indexed by entry column), counting the
/// elbow-filled staircase boxes and the terminal hook.
inline std::vector<int> pipe_turn_counts(const PipeDream& d) { return trace_pipes(d).turns; }

/// Number of crossings in rows 1..n-1.
inline std::vector<int> row_crossing_vector(const PipeDream& d) {
  std::vector<int> v(static_cast<std::size_t>(std::max(d.n - 1, 0)), 0);
  for (auto b : d.crossings) ++v[static_cast<std::size_t>(b.row - 1)];
  return v;
}

/// ASCII rendering: '+' crossing, '/' elbow, ')' terminal hook; the top line
/// lists pipe entry columns and each row starts with the pipe leaving there.
inline std::string render_ascii(const PipeDream& d) {
  auto w = wiring_permutation(d);
  std::ostringstream os;
  const int width = static_cast<int>(std::to_string(d.n).size());
  auto pad = [&](int v) {
    std::string s = std::to_string(v);
    return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
  };
  os << std::string(static_cast<std::size_t>(width), ' ');
  for (int c = 1; c <= d.n; ++c) os << ' ' << pad(c);
  os << '\n';
  for (int r = 1; r <= d.n; ++r) {
    os << pad(w(r));
    for (int c = 1; c + r <= d.n + 1; ++c) {
      char glyph = r + c == d.n + 1 ? ')' : (d.is_crossing({r, c}) ? '+' : '/');
      os << std::string(static_cast<std::size_t>(width), ' ') << glyph;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace moonfill
