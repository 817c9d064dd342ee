#pragma once

// Permutations, Rothe diagrams, rank functions and essential sets, plus the
// permutations attached to Ferrers shapes and moon polyominoes.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "moonfill/error.hpp"
#include "moonfill/shapes.hpp"

namespace moonfill {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    std::vector<char> seen(oneline_.size() + 1, 0);
    for (int v : oneline_) {
      if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[static_cast<std::size_t>(v)])
        throw Error(ErrorCode::InvalidInput, "not a permutation of 1..n");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(oneline_.size()); }
  const std::vector<int>& oneline() const { return oneline_; }

  /// Value at position i (1-based); positions beyond size() are fixed points.
  int operator()(int i) const { return i <= size() ? oneline_[static_cast<std::size_t>(i - 1)] : i; }

  Permutation inverse() const {
    std::vector<int> inv(oneline_.size());
    for (std::size_t i = 0; i < oneline_.size(); ++i) inv[static_cast<std::size_t>(oneline_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// Drops trailing fixed points.
  Permutation trimmed() const {
    auto v = oneline_;
    while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
    Permutation p;
    p.oneline_ = std::move(v);
    return p;
  }

  /// Extends by fixed points up to size n.
  Permutation padded(int n) const {
    Permutation p = *this;
    for (int i = size() + 1; i <= n; ++i) p.oneline_.push_back(i);
    return p;
  }

  /// Swaps positions b and b+1, i.e. multiplies by s_b on the right.
  Permutation times_simple(int b) const {
    Permutation p = padded(b + 1);
    std::swap(p.oneline_[static_cast<std::size_t>(b - 1)], p.oneline_[static_cast<std::size_t>(b)]);
    return p;
  }

  bool is_identity() const { return trimmed().oneline_.empty(); }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> oneline_;
};

inline bool same_up_to_padding(const Permutation& a, const Permutation& b) { return a.trimmed() == b.trimmed(); }

/// Number of inversions.
inline int length(const Permutation& s) {
  int inv = 0;
  const auto& w = s.oneline();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv;
}

/// {(i, s_j) : i < j, s_i > s_j}, sorted.
inline std::vector<BoxCoord> rothe_diagram(const Permutation& s) {
  std::vector<BoxCoord> d;
  const int n = s.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s(i) > s(j)) d.push_back({i, s(j)});
  std::sort(d.begin(), d.end());
  return d;
}

/// #{i <= p : s(i) <= q}.
inline int rank(const Permutation& s, int p, int q) {
  const int n = s.size();
  if (p < 1 || q < 1 || p > n || q > n) throw Error(ErrorCode::OutOfRange, "rank arguments outside 1..n");
  int r = 0;
  for (int i = 1; i <= p; ++i) r += s(i) <= q;
  return r;
}

struct EssentialBox {
  BoxCoord box;
  int rank = 0;

  friend auto operator<=>(const EssentialBox&, const EssentialBox&) = default;
};

/// South-east corners of the Rothe diagram, labelled by the rank function.
inline std::vector<EssentialBox> essential_set(const Permutation& s) {
  auto diagram = rothe_diagram(s);
  std::set<BoxCoord> d(diagram.begin(), diagram.end());
  std::vector<EssentialBox> out;
  for (auto b : diagram)
    if (!d.count({b.row + 1, b.col}) && !d.count({b.row, b.col + 1})) out.push_back({b, rank(s, b.row, b.col)});
  return out;
}

/// The dominant permutation of size n whose diagram is the Ferrers shape with
/// the given row lengths; n defaults to the smallest staircase containing it.
inline Permutation dominant_from_shape(const Partition& rows, std::optional<int> n = std::nullopt) {
  if (!is_partition(rows)) throw Error(ErrorCode::InvalidInput, "row lengths must form a partition");
  const int size = n.value_or(staircase_size(rows));
  if (staircase_size(rows) > size) throw Error(ErrorCode::DoesNotFit, "shape does not fit the staircase of size n");
  std::vector<int> unused(static_cast<std::size_t>(size));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < size; ++i) {
    int code = i < static_cast<int>(rows.size()) ? rows[static_cast<std::size_t>(i)] : 0;
    w.push_back(unused[static_cast<std::size_t>(code)]);
    unused.erase(unused.begin() + code);
  }
  return Permutation(std::move(w));
}

inline Permutation dominant_from_shape(const Polyomino& lambda, std::optional<int> n = std::nullopt) {
  return dominant_from_shape(as_partition(lambda), n);
}

/// 1_k x sigma(mu), where mu is the shape left after removing the first k rows
/// and columns, padded to the smallest staircase containing the shape.
inline Permutation sigma_k_ferrers(const Partition& rows, int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "k must be positive");
  Partition mu;
  for (std::size_t i = static_cast<std::size_t>(k); i < rows.size(); ++i) mu.push_back(std::max(0, rows[i] - k));
  mu = trim_partition(mu);
  auto tau = dominant_from_shape(mu, staircase_size(mu));
  std::vector<int> w;
  for (int i = 1; i <= k; ++i) w.push_back(i);
  for (int v : tau.oneline()) w.push_back(v + k);
  return Permutation(std::move(w)).padded(std::max(staircase_size(rows), k));
}

inline Permutation sigma_k_ferrers(const Polyomino& lambda, int k) { return sigma_k_ferrers(as_partition(lambda), k); }

/// Essential boxes read off the maximal rectangles of a moon polyomino: a
/// rectangle with NW corner (a+1, b+1) and SE corner (i, j), both sides longer
/// than k, yields box (i+b, j+a) with rank a+b+k.
inline std::vector<EssentialBox> essential_set_for_moon(const Polyomino& m, int k) {
  if (!m.at_least(ShapeClass::moon)) throw Error(ErrorCode::NotMoon, "shape is not a moon polyomino");
  std::map<BoxCoord, int> boxes;
  for (const auto& r : maximal_rectangles(m)) {
    if (r.height() <= k || r.width() <= k) continue;
    int a = r.nw.row - 1, b = r.nw.col - 1;
    BoxCoord e{r.se.row + b, r.se.col + a};
    auto [it, inserted] = boxes.emplace(e, a + b + k);
    if (!inserted && it->second != a + b + k)
      throw Error(ErrorCode::Inconsistent, "two maximal rectangles give different ranks to one box");
  }
  std::vector<EssentialBox> out;
  for (auto [box, r] : boxes) out.push_back({box, r});
  return out;
}

/// The unique permutation of size n with the given labelled essential set.
///
/// Rank bounds r(p,q) <= rank at the essential boxes cut out a Bruhat upper
/// interval whose minimum is the permutation sought. That minimum is also
/// lexicographically least, so it is built greedily; a prefix is completable
/// iff placing the unused values in decreasing order meets every bound.
inline Permutation perm_from_essential_set(const std::vector<EssentialBox>& ess, int n) {
  for (const auto& e : ess)
    if (e.box.row < 1 || e.box.col < 1 || e.box.row > n || e.box.col > n || e.rank < 0)
      throw Error(ErrorCode::Inconsistent, "essential box outside the n x n grid");

  auto feasible = [&](const std::vector<int>& prefix, const std::vector<char>& used) {
    std::vector<int> w = prefix;
    for (int v = n; v >= 1; --v)
      if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
    for (const auto& e : ess) {
      int count = 0;
      for (int i = 0; i < e.box.row; ++i) count += w[static_cast<std::size_t>(i)] <= e.box.col;
      if (count > e.rank) return false;
    }
    return true;
  };

  std::vector<int> w;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int pos = 0; pos < n; ++pos) {
    bool placed = false;
    for (int v = 1; v <= n && !placed; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      w.push_back(v);
      used[static_cast<std::size_t>(v)] = 1;
      if (feasible(w, used)) {
        placed = true;
      } else {
        w.pop_back();
        used[static_cast<std::size_t>(v)] = 0;
      }
    }
    if (!placed) throw Error(ErrorCode::Inconsistent, "rank bounds cannot be met");
  }
  Permutation result(std::move(w));
  auto expected = ess;
  std::sort(expected.begin(), expected.end());
  if (essential_set(result) != expected)
    throw Error(ErrorCode::Inconsistent, "no permutation of size " + std::to_string(n) + " has this essential set");
  return result;
}

/// sigma_k(M) of a moon polyomino, of size staircase_size(M).
inline Permutation sigma_k_moon(const Polyomino& m, int k) {
  return perm_from_essential_set(essential_set_for_moon(m, k), staircase_size(m));
}

/// Product s_{w1} s_{w2} ... acting on positions, of size at least n.
inline Permutation word_product(const std::vector<int>& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int b : word) {
    if (b < 1) throw Error(ErrorCode::InvalidInput, "letters must be positive");
    p = p.times_simple(b);
  }
  return p;
}

inline bool is_reduced_word_for(const std::vector<int>& word, const Permutation& s) {
  int n = s.size();
  for (int b : word) n = std::max(n, b + 1);
  auto p = word_product(word, n);
  return same_up_to_padding(p, s) && length(p) == static_cast<int>(word.size());
}

/// All reduced words, in lexicographic order.
inline std::vector<std::vector<int>> reduced_words(const Permutation& s, const Caps& caps = Caps::defaults()) {
  const int len = length(s);
  if (len > caps.word_length) throw Error(ErrorCode::TooLarge, "reduced word enumeration limited to length " + std::to_string(caps.word_length));
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;  // built from the right end
  std::function<void(const Permutation&)> rec = [&](const Permutation& w) {
    if (w.is_identity()) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (int b = 1; b < w.size(); ++b)
      if (w(b) > w(b + 1)) {
        suffix.push_back(b);
        rec(w.times_simple(b));
        suffix.pop_back();
      }
  };
  rec(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace moonfill
