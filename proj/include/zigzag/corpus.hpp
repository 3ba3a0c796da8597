#ifndef ZIGZAG_CORPUS_HPP
#define ZIGZAG_CORPUS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/span.hpp"

namespace zigzag::corpus {

FiniteSpan circle();     // 1 <- 2 -> 1
FiniteSpan interval();   // 1 <- 1 -> 1
FiniteSpan theta();      // 1 <- 3 -> 1
FiniteSpan tree4();      // the path a0 - b0 - a1 - b1
FiniteSpan coproduct();  // 2 <- 0 -> 1

// The fixed corpus, by name, in a stable order.
std::vector<std::pair<std::string, FiniteSpan>> fixed();

// Uniform sizes |A|, |B| in [1, max_side], |S| in [0, max_edges], endpoints
// and basepoint uniform.
FiniteSpan random_span(std::mt19937_64& rng, std::size_t max_side = 5, std::size_t max_edges = 8);

}  // namespace zigzag::corpus

#endif  // ZIGZAG_CORPUS_HPP
