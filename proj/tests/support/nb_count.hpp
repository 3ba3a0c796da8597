#ifndef ZIGZAG_TESTS_NB_COUNT_HPP
#define ZIGZAG_TESTS_NB_COUNT_HPP

// Test-only oracle: counts non-backtracking walks by dynamic programming on
// directed edge states (the Hashimoto matrix), straight from the edge list.
// It shares nothing with the library's word model, stages, or walk oracle.

#include <cstdint>
#include <utility>
#include <vector>

namespace zigzag_test {

// edges[k] = (a-endpoint, b-endpoint); vertices are a-ids 0..na-1 and
// b-ids na..na+nb-1. Returns counts[len] of non-backtracking walks from
// `start` to `target` (flat ids) of each length 0..max_len.
inline std::vector<std::uint64_t> nb_walk_counts(std::size_t na, const std::vector<std::pair<int, int>>& edges,
                                                 int start, int target, std::size_t max_len) {
  // directed state 2k: a -> b along edge k; 2k+1: b -> a
  const std::size_t states = 2 * edges.size();
  auto head = [&](std::size_t st) { return st % 2 == 0 ? int(na) + edges[st / 2].second : edges[st / 2].first; };
  auto tail = [&](std::size_t st) { return st % 2 == 0 ? edges[st / 2].first : int(na) + edges[st / 2].second; };
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  counts[0] = start == target ? 1 : 0;
  std::vector<std::uint64_t> cur(states, 0);
  for (std::size_t st = 0; st < states; ++st)
    if (tail(st) == start) cur[st] = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t st = 0; st < states; ++st)
      if (head(st) == target) counts[len] += cur[st];
    std::vector<std::uint64_t> next(states, 0);
    for (std::size_t st = 0; st < states; ++st) {
      if (!cur[st]) continue;
      for (std::size_t nx = 0; nx < states; ++nx)
        if (tail(nx) == head(st) && nx / 2 != st / 2) next[nx] += cur[st];
    }
    cur = std::move(next);
  }
  return counts;
}

inline std::uint64_t total(const std::vector<std::uint64_t>& counts, std::size_t upto) {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i <= upto && i < counts.size(); ++i) t += counts[i];
  return t;
}

}  // namespace zigzag_test

#endif
