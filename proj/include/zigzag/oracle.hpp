#ifndef ZIGZAG_ORACLE_HPP
#define ZIGZAG_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "zigzag/span.hpp"

// Ground truth computed directly on the realized graph. Nothing here uses
// the word model or the stage construction.
namespace zigzag::oracle {

struct Walk {
  std::vector<Vertex> vertices;  // vertices.size() == edges.size() + 1
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
};

// Non-backtracking walks start -> target of length <= max_len, ordered by
// (length, edge sequence). Throws std::out_of_range on unknown vertices.
std::vector<Walk> nbt_walks(const RealizedGraph& graph, Vertex start, Vertex target, std::size_t max_len);

// Rank of the free fundamental group of the component of v.
std::size_t pi1_rank(const RealizedGraph& graph, Vertex v);

struct CompareReport {
  std::size_t words = 0;
  std::size_t walks = 0;
  std::string first_mismatch;  // empty when the bijection holds

  bool ok() const { return first_mismatch.empty(); }
};

// Step-for-step comparison of enumerated reduced words with the oracle walks.
CompareReport compare_words_walks(const FiniteSpan& span, Vertex target, std::size_t max_len);

}  // namespace zigzag::oracle

#endif  // ZIGZAG_ORACLE_HPP
