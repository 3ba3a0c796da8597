#ifndef ZIGZAG_VERIFY_HPP
#define ZIGZAG_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zigzag/span.hpp"
#include "zigzag/words.hpp"

namespace zigzag {

struct CheckOptions {
  bool oracle = false;
  std::uint64_t seed = 0;
  std::size_t max_len = 8;
  std::size_t stages = 4;
  std::size_t random_words = 1000;
  std::size_t random_families = 5;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckSummary {
  std::vector<CheckResult> results;

  bool passed() const;
};

// A random alternating walk from a0 of length <= max_len, possibly backtracking.
ZigzagWord random_word(const FiniteSpan& span, std::size_t max_len, std::mt19937_64& rng);

// Runs every invariant suite on one span. Deterministic for fixed options.
CheckSummary run_checks(const FiniteSpan& span, const CheckOptions& options);

}  // namespace zigzag

#endif  // ZIGZAG_VERIFY_HPP
