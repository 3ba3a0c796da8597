#ifndef ZIGZAG_WORDS_HPP
#define ZIGZAG_WORDS_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/span.hpp"

namespace zigzag {

enum class Dir : std::uint8_t { Fwd, Bwd };

// Fwd(s) crosses from f(s) to g(s); Bwd(s) from g(s) to f(s).
struct Step {
  Dir dir = Dir::Fwd;
  EdgeId edge = 0;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

inline Step fwd(EdgeId s) { return Step{Dir::Fwd, s}; }
inline Step bwd(EdgeId s) { return Step{Dir::Bwd, s}; }

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An alternating crossing sequence based at a0. The empty word is refl.
// Ordering is (length, lexicographic steps), the canonical enumeration order.
struct ZigzagWord {
  std::vector<Step> steps;

  ZigzagWord() = default;
  ZigzagWord(std::initializer_list<Step> s) : steps(s) {}
  explicit ZigzagWord(std::vector<Step> s) : steps(std::move(s)) {}

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }

  friend bool operator==(const ZigzagWord&, const ZigzagWord&) = default;
  friend std::strong_ordering operator<=>(const ZigzagWord& x, const ZigzagWord& y) {
    if (auto c = x.steps.size() <=> y.steps.size(); c != 0) return c;
    return x.steps <=> y.steps;
  }
};

// Throws WordError unless w alternates from a0 with matching endpoints.
void validate(const FiniteSpan& span, const ZigzagWord& w);
bool is_reduced(const ZigzagWord& w);

Vertex endpoint(const FiniteSpan& span, const ZigzagWord& w);

struct ReductionResult {
  ZigzagWord word;
  std::size_t cancellations = 0;
};

enum class Strategy { LeftmostInnermost, RightmostInnermost };

// Deletes adjacent inverse pairs until none remain.
ReductionResult reduce_with(const FiniteSpan& span, const ZigzagWord& w, Strategy strategy);
ZigzagWord reduce(const FiniteSpan& span, const ZigzagWord& w);

// w ++ [Fwd s], reduced. w must be reduced and end at f(s).
ZigzagWord concat_fwd(const FiniteSpan& span, const ZigzagWord& w, EdgeId s);
// w ++ [Bwd s], reduced. w must be reduced and end at g(s).
ZigzagWord concat_bwd(const FiniteSpan& span, const ZigzagWord& w, EdgeId s);
// Transition of the canonical identity descent data over glue(s).
inline ZigzagWord transport_glue(const FiniteSpan& span, const ZigzagWord& w, EdgeId s) {
  return concat_fwd(span, w, s);
}

// Least stage n with w in P_A^n (A-endpoint) or P_B^n (B-endpoint).
std::size_t stage_of(const ZigzagWord& w);

// Reduced words a0 -> target of length <= max_len, in canonical order.
std::vector<ZigzagWord> enumerate(const FiniteSpan& span, Vertex target, std::size_t max_len);

// All reduced words of length <= max_len regardless of endpoint.
std::vector<ZigzagWord> enumerate_all(const FiniteSpan& span, std::size_t max_len);

std::string to_string(const FiniteSpan& span, const ZigzagWord& w);
// Parses "refl" or ">s <t ...", enforcing alternation and endpoint matching.
// Reduction is not applied.
ZigzagWord parse_word(const FiniteSpan& span, std::string_view text);

}  // namespace zigzag

#endif  // ZIGZAG_WORDS_HPP
