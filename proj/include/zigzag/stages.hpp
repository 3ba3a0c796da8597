#ifndef ZIGZAG_STAGES_HPP
#define ZIGZAG_STAGES_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/quotient.hpp"
#include "zigzag/seq_colim.hpp"
#include "zigzag/span.hpp"
#include "zigzag/words.hpp"

namespace zigzag {


// left <-lmap- middle -rmap-> right, all finite sets {0..k-1}.
struct SpanInstance {
  std::size_t left = 0;
  std::size_t middle = 0;
  std::size_t right = 0;
  FinMap lmap;
  FinMap rmap;
};

// π₀ of the pushout. Elements of the quotient are left ⊔ right with the
// right part offset by `left`.
struct PushoutPi0 {
  QuotientSet quotient;
  std::size_t left_size = 0;

  std::size_t inl(std::size_t x) const { return quotient.class_of(x); }
  std::size_t inr(std::size_t y) const { return quotient.class_of(left_size + y); }
};

PushoutPi0 pushout_pi0(const SpanInstance& sp);

class CoconeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The map out of the pushout classes induced by a cocone (i, j). Throws
// CoconeError when i(lmap m) != j(rmap m) for some m.
FinMap cogap_set(const SpanInstance& sp, const PushoutPi0& po, const FinMap& i, const FinMap& j);

// Provenance of a cell in a stage pushout.
struct Cell {
  enum class Kind : std::uint8_t { Refl, Inl, Inr };
  Kind kind = Kind::Refl;
  EdgeId edge = 0;          // Inr only
  std::size_t source = 0;   // class index in the previous stage (Inl) or in the bridged family (Inr)
};

// inl(p) ~ inr(s, image): one identification per middle element (s, p).
struct GlueEdge {
  EdgeId edge;
  std::size_t middle;      // p, a class of the left set
  std::size_t left_cell;
  std::size_t right_cell;
};

// One fiber P_B^n(b) or P_A^n(a) at one stage.
struct Fiber {
  std::vector<Cell> cells;
  std::vector<GlueEdge> glue;
  QuotientSet classes;
  FinMap incl;                          // previous stage classes -> classes (empty at stage 0)
  std::vector<std::size_t> inr_begin;   // per edge: first Inr cell over it, or npos

  std::size_t num_classes() const { return classes.num_classes(); }
  std::size_t num_left() const;  // Inl (or Refl) cells come first
  // The defining span: left = previous stage, middle = glue, right = Inr cells.
  SpanInstance span_instance() const;
  // Class of the right point constructor inr(s, x).
  std::size_t inr_class(EdgeId s, std::size_t x) const { return classes.class_of(inr_begin.at(s) + x); }
};

struct StageFamily {
  std::size_t n = 0;
  std::vector<Fiber> pb;  // indexed by b
  std::vector<Fiber> pa;  // indexed by a
  // –∙ₙs̄ : P_B^n(g s) -> P_A^n(f s), per edge
  std::vector<FinMap> concat_bwd_stage;
  // –∙ₙs : P_A^n(f s) -> P_B^{n+1}(g s), per edge; empty on the last built stage
  std::vector<FinMap> concat_fwd_stage;
};

using Stages = std::vector<StageFamily>;

// Stages 0..max_stage of the zigzag construction.
Stages build_stages(const FiniteSpan& span, std::size_t max_stage);

// –∙ₙs as the right point constructor of P_B^{n+1}(g s); needs stage n+1.
FinMap bridge_fwd(const FiniteSpan& span, const Stages& stages, std::size_t n, EdgeId s);

struct FiberCycles {
  Vertex fiber;
  std::size_t cells = 0;
  std::size_t glue = 0;
  std::size_t components = 0;
  std::size_t cycles = 0;
};

// Independent cycles of each stage-n gluing graph: glue - cells + components.
std::vector<FiberCycles> cycle_diagnostic(const FiniteSpan& span, const Stages& stages, std::size_t n);

struct FiberBijection {
  Vertex fiber;
  std::vector<ZigzagWord> word_of_class;  // class index -> reduced word
  std::size_t word_count = 0;             // independently enumerated words of admissible length
  bool ok = false;
};

struct BijectionReport {
  std::size_t n = 0;
  std::vector<FiberBijection> fibers;  // all A fibers then all B fibers
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
  const FiberBijection& fiber(Vertex v) const;
};

// Compares stage n against reduced words of length <= 2n (A) and <= 2n-1 (B),
// including naturality for incl, –∙s̄ and –∙s. Mismatches are reported, not thrown.
BijectionReport stage_word_bijection(const FiniteSpan& span, const Stages& stages, std::size_t n);

// P_A^•(a) and P_B^•(b) as sequential diagrams over all built stages.
FinSeqDiagram stage_diagram(const Stages& stages, Vertex v);

// The zigzag between P_A^•(f s) and P_B^{•+1}(g s) with bound stages.size()-2.
SeqZigzag construction_zigzag(const FiniteSpan& span, const Stages& stages, EdgeId s);

}  // namespace zigzag

#endif  // ZIGZAG_STAGES_HPP
