#ifndef ZIGZAG_SEQ_COLIM_HPP
#define ZIGZAG_SEQ_COLIM_HPP

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/quotient.hpp"

namespace zigzag {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using FinMap = std::vector<std::size_t>;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// A_0 -> A_1 -> ... -> A_N, where A_n = {0, ..., sizes[n]-1}.
class FinSeqDiagram {
 public:
  FinSeqDiagram() = default;
  FinSeqDiagram(std::vector<std::size_t> sizes, std::vector<FinMap> maps);

  static FinSeqDiagram constant(std::size_t set_size, std::size_t bound);

  std::size_t bound() const { return sizes_.size() - 1; }
  std::size_t size(std::size_t n) const { return sizes_.at(n); }
  const FinMap& map(std::size_t n) const { return maps_.at(n); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  // A_{n+1} as the n-th set; requires bound >= 1.
  FinSeqDiagram shifted() const;
  FinSeqDiagram truncated(std::size_t bound) const;

 private:
  std::vector<std::size_t> sizes_{0};
  std::vector<FinMap> maps_;
};

struct StagedElement {
  std::size_t stage;
  std::size_t element;
  friend bool operator==(const StagedElement&, const StagedElement&) = default;
};

// Set-level colimit of a truncated sequential diagram: the disjoint union of
// all stages modulo x ~ a_n(x). Representatives are least (stage, element).
class DirectLimit {
 public:
  DirectLimit() = default;
  DirectLimit(std::vector<std::size_t> offsets, QuotientSet quotient)
      : offsets_(std::move(offsets)), quotient_(std::move(quotient)) {}

  std::size_t num_classes() const { return quotient_.num_classes(); }
  std::size_t bound() const { return offsets_.size() - 2; }
  // ι_n
  std::size_t iota(std::size_t n, std::size_t x) const { return quotient_.class_of(offsets_.at(n) + x); }
  StagedElement representative(std::size_t c) const { return unflat(quotient_.representative(c)); }
  const QuotientSet& quotient() const { return quotient_; }
  StagedElement unflat(std::size_t i) const;

 private:
  std::vector<std::size_t> offsets_;  // offsets_[n] = first flat index of stage n; one past the end last
  QuotientSet quotient_;
};

DirectLimit direct_limit(const FinSeqDiagram& d);
// Same limit with the unions performed in the given permutation of stage
// elements; used to check that the partition does not depend on union order.
DirectLimit direct_limit(const FinSeqDiagram& d, const std::vector<std::size_t>& union_order);

// Per-level maps h_n : A_n -> B_n with b_n ∘ h_n = h_{n+1} ∘ a_n pointwise.
class SeqMorphism {
 public:
  SeqMorphism(const FinSeqDiagram& source, const FinSeqDiagram& target, std::vector<FinMap> levels);

  std::size_t bound() const { return levels_.size() - 1; }
  const FinMap& level(std::size_t n) const { return levels_.at(n); }
  const std::vector<FinMap>& levels() const { return levels_; }

 private:
  std::vector<FinMap> levels_;
};

SeqMorphism compose(const SeqMorphism& second, const SeqMorphism& first, const FinSeqDiagram& source,
                    const FinSeqDiagram& target);

// f_∞ as a map on class indices. Throws DiagramError if the image of some
// class depends on the chosen member.
std::vector<std::size_t> map_of_limits(const SeqMorphism& m, const FinSeqDiagram& source,
                                       const FinSeqDiagram& target);

// Class map from the limit of d.shifted() to the limit of d, induced by ι_{n+1}.
std::vector<std::size_t> shift_identification(const FinSeqDiagram& d);

// fwd_n : A_n -> B_n and bwd_n : B_n -> A_{n+1} with
//   U: a_n = bwd_n ∘ fwd_n   and   L: b_n = fwd_{n+1} ∘ bwd_n.
class SeqZigzag {
 public:
  SeqZigzag(FinSeqDiagram left, FinSeqDiagram right, std::vector<FinMap> fwd, std::vector<FinMap> bwd);

  std::size_t bound() const { return left_.bound(); }
  const FinSeqDiagram& left() const { return left_; }
  const FinSeqDiagram& right() const { return right_; }
  const FinMap& fwd(std::size_t n) const { return fwd_.at(n); }
  const FinMap& bwd(std::size_t n) const { return bwd_.at(n); }

 private:
  FinSeqDiagram left_;
  FinSeqDiagram right_;
  std::vector<FinMap> fwd_;
  std::vector<FinMap> bwd_;
};

// Zigzag from B_• to A_{•+1}: fwd'_n = bwd_n, bwd'_n = fwd_{n+1}. Loses one
// level of truncation.
SeqZigzag half_shift(const SeqZigzag& z);
SeqMorphism zigzag_to_morphism(const SeqZigzag& z);

struct EquivalenceReport {
  std::vector<std::size_t> forward;   // f_∞ on classes of the left limit
  std::vector<std::size_t> backward;  // g_∞ on classes of the right limit, npos where undefined
  std::size_t safe_left = 0;          // truncation-safe classes checked on each side
  std::size_t safe_right = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Throws DiagramError when the bound is below 2.
EquivalenceReport zigzag_equivalence(const SeqZigzag& z);

}  // namespace zigzag

#endif  // ZIGZAG_SEQ_COLIM_HPP
