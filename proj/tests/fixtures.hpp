#pragma once

// Shared small objects: the running examples used throughout the tests.

#include <vector>

#include "moonfill/moonfill.hpp"

namespace fixtures {

using namespace moonfill;

// moon with rows spanning cols [3,5],[1,6],[1,7],[1,7],[2,5],[3,4]
inline Polyomino moon_example() {
  const int span[6][2] = {{3, 5}, {1, 6}, {1, 7}, {1, 7}, {2, 5}, {3, 4}};
  std::vector<BoxCoord> boxes;
  for (int r = 0; r < 6; ++r)
    for (int c = span[r][0]; c <= span[r][1]; ++c) boxes.push_back({r + 1, c});
  return classify(boxes);
}

inline Partition ferrers_example() { return {8, 6, 6, 5, 4, 4, 1}; }

// reduced pipe dream of [1,2,7,6,5,8,3,4,9,10]
inline PipeDream ferrers_pipe_dream() {
  return make_pipe_dream(10, {{1, 4}, {1, 5}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {6, 1}, {6, 2}});
}

// the 2-triangulation of the octagon used as a worked example
inline Triangulation octagon_triangulation() {
  return make_triangulation(8, 2, {{1, 4}, {1, 6}, {3, 6}, {3, 7}, {3, 8}, {4, 7}});
}

inline std::vector<BoxCoord> staircase8_ne_marks() {
  return {{1, 1}, {1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1},
          {3, 3}, {3, 4}, {3, 5}, {4, 3}, {4, 4}, {5, 1}, {5, 2}, {5, 3}, {6, 1}, {6, 2}, {7, 1}};
}

inline std::vector<BoxCoord> staircase8_se_marks() {
  return {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 1}, {2, 2}, {2, 3}, {2, 5}, {2, 6}, {3, 1},
          {3, 3}, {3, 4}, {3, 5}, {4, 1}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {6, 1}, {6, 2}, {7, 1}};
}

// plain permutation product of simple transpositions, independent of the library
inline std::vector<int> apply_word(const std::vector<int>& word, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  for (int b : word) std::swap(p[static_cast<std::size_t>(b - 1)], p[static_cast<std::size_t>(b)]);
  return p;
}

inline int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}

}  // namespace fixtures
