#pragma once

// Reading biwords of pipe dreams, compatible sequences, Edelman-Greene column
// insertion and its inverse, flagged tableaux and flagged promotion.

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/pipedreams.hpp"
#include "moonfill/shapes.hpp"

namespace moonfill {

struct Biword {
  std::vector<int> top;
  std::vector<int> bottom;

  std::size_t size() const { return top.size(); }
  friend auto operator<=>(const Biword&, const Biword&) = default;
};

/// Column (i, i+j-1) for every crossing (i, j), rows north to south and each
/// row east to west.
inline Biword reading_biword(const PipeDream& d) {
  auto boxes = d.crossings;
  std::sort(boxes.begin(), boxes.end(), [](BoxCoord a, BoxCoord b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  Biword t;
  for (auto b : boxes) {
    t.top.push_back(b.row);
    t.bottom.push_back(b.row + b.col - 1);
  }
  return t;
}

/// Shape conditions only: top weakly increasing, top_i <= bottom_i, bottom
/// strictly decreasing inside a run of equal tops.
inline bool is_compatible(const Biword& t) {
  if (t.top.size() != t.bottom.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.top[i] < 1 || t.top[i] > t.bottom[i]) return false;
    if (i + 1 < t.size()) {
      if (t.top[i] > t.top[i + 1]) return false;
      if (t.top[i] == t.top[i + 1] && t.bottom[i] <= t.bottom[i + 1]) return false;
    }
  }
  return true;
}

/// Shape conditions plus: bottom is a reduced word for s.
inline bool is_compatible(const Biword& t, const Permutation& s) {
  return is_compatible(t) && is_reduced_word_for(t.bottom, s);
}

inline PipeDream pipe_dream_from_biword(const Biword& t, int n) {
  if (!is_compatible(t)) throw Error(ErrorCode::Inconsistent, "biword is not a compatible sequence");
  std::vector<BoxCoord> boxes;
  for (std::size_t i = 0; i < t.size(); ++i) {
    BoxCoord b{t.top[i], t.bottom[i] - t.top[i] + 1};
    if (b.row + b.col > n) throw Error(ErrorCode::Inconsistent, "crossing falls outside the staircase");
    boxes.push_back(b);
  }
  std::sort(boxes.begin(), boxes.end());
  return PipeDream{n, std::move(boxes)};
}

struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    Partition p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return p;
  }
  std::size_t size() const {
    std::size_t s = 0;
    for (const auto& r : rows) s += r.size();
    return s;
  }
  bool empty() const { return rows.empty(); }
  int column_height(std::size_t col) const {
    int h = 0;
    while (static_cast<std::size_t>(h) < rows.size() && rows[static_cast<std::size_t>(h)].size() > col) ++h;
    return h;
  }

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

inline bool is_semistandard(const Tableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (row.empty()) return false;
    if (i > 0 && row.size() > t.rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0 && row[j] < row[j - 1]) return false;
      if (i > 0 && row[j] <= t.rows[i - 1][j]) return false;
    }
  }
  return true;
}

/// Semistandard with positive entries and row i bounded by i + k.
inline bool is_k_flagged(const Tableau& q, int k) {
  if (!is_semistandard(q)) return false;
  for (std::size_t i = 0; i < q.rows.size(); ++i)
    for (int v : q.rows[i])
      if (v < 1 || v > static_cast<int>(i) + 1 + k) return false;
  return true;
}

namespace detail {

/// Column-inserts x into p, returning the (row, col) of the new box.
inline std::pair<std::size_t, std::size_t> eg_column_insert(Tableau& p, int x) {
  for (std::size_t col = 0;; ++col) {
    const int h = p.column_height(col);
    int hit = -1;
    for (int i = 0; i < h; ++i)
      if (p.rows[static_cast<std::size_t>(i)][col] > x) {
        hit = i;
        break;
      }
    if (hit < 0) {
      auto r = static_cast<std::size_t>(h);
      if (r == p.rows.size()) p.rows.emplace_back();
      p.rows[r].push_back(x);
      return {r, col};
    }
    auto& cell = p.rows[static_cast<std::size_t>(hit)][col];
    const int y = cell;
    // x and x+1 both present: the column stays, x+1 moves on
    if (!(y == x + 1 && hit > 0 && p.rows[static_cast<std::size_t>(hit - 1)][col] == x)) cell = x;
    x = y;
  }
}

inline std::vector<int> some_reduced_word(const Permutation& s) {
  std::vector<int> suffix;
  std::vector<int> w = s.oneline();
  for (bool found = true; found;) {
    found = false;
    for (std::size_t b = 1; b < w.size(); ++b)
      if (w[b - 1] > w[b]) {
        std::swap(w[b - 1], w[b]);
        suffix.push_back(static_cast<int>(b));
        found = true;
        break;
      }
  }
  return {suffix.rbegin(), suffix.rend()};
}

}  // namespace detail

struct Insertion {
  Tableau p;
  Tableau q;
};

/// Column Edelman-Greene insertion of the bottom word, recording the top word.
inline Insertion eg_insert(const Biword& t) {
  if (t.top.size() != t.bottom.size()) throw Error(ErrorCode::InvalidInput, "biword rows differ in length");
  int n = 1;
  for (int b : t.bottom) {
    if (b < 1) throw Error(ErrorCode::InvalidInput, "letters must be positive");
    n = std::max(n, b + 1);
  }
  if (length(word_product(t.bottom, n)) != static_cast<int>(t.size()))
    throw Error(ErrorCode::NotReduced, "bottom word is not reduced");
  Insertion out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto [r, c] = detail::eg_column_insert(out.p, t.bottom[i]);
    if (r == out.q.rows.size()) out.q.rows.emplace_back();
    if (out.q.rows[r].size() != c) throw Error(ErrorCode::Inconsistent, "recording shape diverged");
    out.q.rows[r].push_back(t.top[i]);
  }
  return out;
}

inline Tableau insertion_tableau_of(const std::vector<int>& word) {
  return eg_insert(Biword{std::vector<int>(word.size(), 1), word}).p;
}

/// The compatible sequence of s recorded by q. P is fixed by s.
inline Biword eg_inverse(const Tableau& q, const Permutation& s) {
  Tableau p = insertion_tableau_of(detail::some_reduced_word(s));
  if (p.shape() != q.shape()) throw Error(ErrorCode::NotInImage, "recording tableau has the wrong shape");
  Tableau rec = q;
  std::vector<int> top, bottom;
  while (!rec.rows.empty()) {
    // rightmost occurrence of the largest entry
    std::size_t br = 0, bc = 0;
    int best = 0;
    for (std::size_t i = 0; i < rec.rows.size(); ++i)
      for (std::size_t j = 0; j < rec.rows[i].size(); ++j)
        if (rec.rows[i][j] > best || (rec.rows[i][j] == best && j > bc)) {
          best = rec.rows[i][j];
          br = i;
          bc = j;
        }
    if (bc + 1 != rec.rows[br].size() || (br + 1 < rec.rows.size() && rec.rows[br + 1].size() > bc))
      throw Error(ErrorCode::NotInImage, "largest entry is not at a corner");
    int y = p.rows[br][bc];
    rec.rows[br].pop_back();
    p.rows[br].pop_back();
    if (rec.rows[br].empty()) {
      rec.rows.pop_back();
      p.rows.pop_back();
    }
    for (std::size_t col = bc; col-- > 0;) {
      const int h = p.column_height(col);
      int at = -1, below = -1;
      for (int i = 0; i < h; ++i) {
        int v = p.rows[static_cast<std::size_t>(i)][col];
        if (v == y) at = i;
        if (v < y) below = i;
      }
      if (at >= 0) {
        if (at == 0 || p.rows[static_cast<std::size_t>(at - 1)][col] != y - 1)
          throw Error(ErrorCode::NotInImage, "reverse bump cannot proceed");
        y = y - 1;
      } else {
        if (below < 0) throw Error(ErrorCode::NotInImage, "reverse bump cannot proceed");
        std::swap(p.rows[static_cast<std::size_t>(below)][col], y);
      }
    }
    top.push_back(best);
    bottom.push_back(y);
  }
  Biword t{{top.rbegin(), top.rend()}, {bottom.rbegin(), bottom.rend()}};
  if (!is_compatible(t, s) || eg_insert(t).q != q)
    throw Error(ErrorCode::NotInImage, "tableau is not the recording tableau of a compatible sequence");
  return t;
}

/// Every k-flagged tableau of shape mu, in lexicographic order of rows.
inline std::vector<Tableau> enumerate_flagged(const Partition& mu, int k, const Caps& caps = Caps::defaults()) {
  if (!is_partition(mu)) throw Error(ErrorCode::InvalidInput, "shape must be a partition");
  auto shape = trim_partition(mu);
  int total = 0;
  for (int v : shape) total += v;
  if (total > caps.tableau_boxes)
    throw Error(ErrorCode::TooLarge, "tableau enumeration limited to " + std::to_string(caps.tableau_boxes) + " boxes");
  std::vector<Tableau> out;
  Tableau t;
  for (int len : shape) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == t.rows.size()) {
      out.push_back(t);
      return;
    }
    if (j == t.rows[i].size()) return rec(i + 1, 0);
    int lo = std::max(j > 0 ? t.rows[i][j - 1] : 1, i > 0 ? t.rows[i - 1][j] + 1 : 1);
    int hi = static_cast<int>(i) + 1 + k;
    for (int v = lo; v <= hi; ++v) {
      t.rows[i][j] = v;
      rec(i, j + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline std::vector<Tableau> enumerate_flagged(const Polyomino& mu, int k, const Caps& caps = Caps::defaults()) {
  return enumerate_flagged(as_partition(mu), k, caps);
}

/// Delete the 1s, rectify by jeu de taquin, subtract 1, refill the vacated
/// boxes of row i with i + k.
inline Tableau flagged_promotion(const Tableau& q, int k) {
  if (!is_k_flagged(q, k)) throw Error(ErrorCode::NotFlagged, "tableau is not k-flagged");
  const auto shape = q.shape();
  // rows of optional entries; 0 marks a hole
  auto t = q.rows;
  std::size_t ones = 0;
  if (!t.empty())
    while (ones < t[0].size() && t[0][ones] == 1) ++ones;
  for (std::size_t j = 0; j < ones; ++j) t[0][j] = 0;

  for (std::size_t hole = ones; hole-- > 0;) {
    std::size_t r = 0, c = hole;
    for (;;) {
      bool has_right = c + 1 < t[r].size();
      bool has_below = r + 1 < t.size() && c < t[r + 1].size();
      if (!has_right && !has_below) break;
      bool take_below = has_below && (!has_right || t[r + 1][c] <= t[r][c + 1]);
      if (take_below) {
        t[r][c] = t[r + 1][c];
        ++r;
      } else {
        t[r][c] = t[r][c + 1];
        ++c;
      }
    }
    t[r].pop_back();  // the hole has reached an outer corner
    if (t[r].empty()) t.pop_back();
  }

  Tableau out;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    std::vector<int> row;
    std::size_t kept = i < t.size() ? t[i].size() : 0;
    const auto full = static_cast<std::size_t>(shape[i]);
    std::size_t kept_above = i == 0 ? full : (i - 1 < t.size() ? t[i - 1].size() : 0);
    if (kept < full && full > kept_above)
      throw Error(ErrorCode::Inconsistent, "vacated boxes do not form a horizontal strip");
    for (std::size_t j = 0; j < kept; ++j) row.push_back(t[i][j] - 1);
    for (std::size_t j = kept; j < full; ++j) row.push_back(static_cast<int>(i) + 1 + k);
    out.rows.push_back(std::move(row));
  }
  if (!is_k_flagged(out, k)) throw Error(ErrorCode::Inconsistent, "promotion left the flagged set");
  return out;
}

}  // namespace moonfill
