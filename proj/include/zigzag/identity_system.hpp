#ifndef ZIGZAG_IDENTITY_SYSTEM_HPP
#define ZIGZAG_IDENTITY_SYSTEM_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/seq_colim.hpp"
#include "zigzag/span.hpp"
#include "zigzag/words.hpp"

namespace zigzag {

class DescentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family over reduced words of length <= bound, with a transition
//   transport(s, w, -) : Q(w) -> Q(w ∙ s)
// for every w ending at f(s), and its inverse transport_inv(s, w, -).
template <typename F>
concept DescentFamilyLike = requires(const F& fam, EdgeId s, const ZigzagWord& w, const typename F::element_type& e) {
  { fam.bound() } -> std::convertible_to<std::size_t>;
  { fam.contains(w, e) } -> std::same_as<bool>;
  { fam.transport(s, w, e) } -> std::convertible_to<typename F::element_type>;
  { fam.transport_inv(s, w, e) } -> std::convertible_to<typename F::element_type>;
};

// A bijection between {0..k-1} and itself, stored with its inverse.
struct Bijection {
  FinMap forward;
  FinMap inverse;

  static Bijection from_forward(FinMap forward);  // throws DescentError unless a permutation
  static Bijection identity(std::size_t k);
};

// Descent data given by explicit tables: fiber sizes per word and one
// bijection per (edge, word).
class DescentFamily {
 public:
  using element_type = std::size_t;

  DescentFamily(const FiniteSpan& span, std::size_t bound) : span_(&span), bound_(bound) {}

  using SizeFn = std::function<std::size_t(const ZigzagWord&)>;
  using TransitionFn = std::function<FinMap(EdgeId, const ZigzagWord&, std::size_t)>;
  // Fills every fiber of length <= bound and every transition whose target
  // word stays within the bound.
  static DescentFamily generate(const FiniteSpan& span, std::size_t bound, const SizeFn& size,
                                const TransitionFn& transition);

  void set_fiber(const ZigzagWord& w, std::size_t size);
  void set_transition(EdgeId s, const ZigzagWord& w, FinMap forward);
  void erase_fiber(const ZigzagWord& w) { fibers_.erase(w); }

  std::size_t bound() const { return bound_; }
  const FiniteSpan& span() const { return *span_; }
  std::size_t fiber_size(const ZigzagWord& w) const;
  bool contains(const ZigzagWord& w, std::size_t e) const { return e < fiber_size(w); }
  std::size_t transport(EdgeId s, const ZigzagWord& w, std::size_t e) const;
  std::size_t transport_inv(EdgeId s, const ZigzagWord& w, std::size_t e) const;

 private:
  const Bijection& transition(EdgeId s, const ZigzagWord& w) const;

  const FiniteSpan* span_;
  std::size_t bound_;
  std::map<ZigzagWord, std::size_t> fibers_;
  std::map<std::pair<EdgeId, ZigzagWord>, Bijection> transitions_;
};

// All fibers {0}; every transition the identity.
DescentFamily trivial_family(const FiniteSpan& span, std::size_t bound);
// Fibers {0,1}; crossing `edge` swaps, other edges act trivially.
DescentFamily parity_family(const FiniteSpan& span, std::size_t bound, EdgeId edge);
// Fibers the integer window [-bound, bound] (element i encodes i - bound);
// crossing `edge` forward adds one, cyclically on the window.
DescentFamily winding_family(const FiniteSpan& span, std::size_t bound, EdgeId edge);
// Fiber sizes in 1..max_fiber and permutations drawn from rng.
DescentFamily random_family(const FiniteSpan& span, std::size_t bound, std::size_t max_fiber, std::mt19937_64& rng);

// The canonical identity descent data: the fiber over every word to x is the
// set of all reduced words a0 -> x, with transport (- ∙ s). The fibers are
// infinite; membership is decided, not stored.
class IdentityFamily {
 public:
  using element_type = ZigzagWord;

  IdentityFamily(const FiniteSpan& span, std::size_t bound) : span_(&span), bound_(bound) {}

  std::size_t bound() const { return bound_; }
  bool contains(const ZigzagWord& w, const ZigzagWord& e) const;
  ZigzagWord transport(EdgeId s, const ZigzagWord&, const ZigzagWord& e) const {
    return transport_glue(*span_, e, s);
  }
  ZigzagWord transport_inv(EdgeId s, const ZigzagWord&, const ZigzagWord& e) const {
    return concat_bwd(*span_, e, s);
  }

 private:
  const FiniteSpan* span_;
  std::size_t bound_;
};

template <typename Elem>
struct Section {
  std::map<ZigzagWord, Elem> values;  // canonical word order

  const Elem& at(const ZigzagWord& w) const {
    auto it = values.find(w);
    if (it == values.end()) throw DescentError("section undefined at a word within the bound");
    return it->second;
  }
};

struct SectionReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  std::optional<ZigzagWord> first_bad;  // least offending word, canonical order

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void note(SectionReport& rep, const FiniteSpan& span, const ZigzagWord& w, const std::string& what) {
  if (!rep.first_bad || w < *rep.first_bad) rep.first_bad = w;
  rep.violations.push_back(what + " at " + to_string(span, w));
}

}  // namespace detail

// The section determined by q0 at refl, built by recursion on word length:
//   t(w ∙ Fwd s) = Q_S(s, w)(t(w)),   t(w ∙ Bwd s) = Q_S(s, w ∙ Bwd s)^{-1}(t(w)).
// Every reduced word within the bound is reached exactly once, from the
// word obtained by deleting its last step.
template <DescentFamilyLike F>
Section<typename F::element_type> elim_section(const FiniteSpan& span, const F& fam,
                                               const typename F::element_type& q0) {
  using Elem = typename F::element_type;
  Section<Elem> sec;
  const ZigzagWord refl;
  if (!fam.contains(refl, q0)) throw DescentError("q0 is not in the fiber over refl");
  sec.values.emplace(refl, q0);

  std::vector<ZigzagWord> layer{refl};
  for (std::size_t len = 0; len < fam.bound(); ++len) {
    std::vector<ZigzagWord> next;
    for (const ZigzagWord& w : layer) {
      const Elem& tw = sec.values.at(w);
      Vertex at = endpoint(span, w);
      const auto& edges = at.side == Side::A ? span.edges_at_a(at.index) : span.edges_at_b(at.index);
      for (EdgeId s : edges) {
        if (!w.empty() && w.steps.back().edge == s) continue;  // would cancel
        ZigzagWord ext = w;
        Elem value;
        if (at.side == Side::A) {
          ext.steps.push_back(fwd(s));
          value = fam.transport(s, w, tw);
        } else {
          ext.steps.push_back(bwd(s));
          // concat_fwd(ext, s) == w, so ext is the domain word of this transition
          value = fam.transport_inv(s, ext, tw);
          if (!(fam.transport(s, ext, value) == tw))
            throw DescentError("transition over " + span.edges()[s].label + " is not bijective at " +
                               to_string(span, ext));
        }
        if (!fam.contains(ext, value))
          throw DescentError("transition leaves its fiber at " + to_string(span, ext));
        if (!sec.values.emplace(ext, std::move(value)).second)
          throw DescentError("word reached twice: " + to_string(span, ext));
        next.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }
  return sec;
}

// Checks t(refl) = q0 and Q_S(s, w)(t(w)) = t(w ∙ s) for every w ending at
// f(s) with w ∙ s inside the bound, including w ending in Bwd(s).
template <DescentFamilyLike F>
SectionReport check_computation(const FiniteSpan& span, const F& fam, const typename F::element_type& q0,
                                const Section<typename F::element_type>& sec) {
  SectionReport rep;
  const ZigzagWord refl;
  auto it = sec.values.find(refl);
  ++rep.checked;
  if (it == sec.values.end() || !(it->second == q0)) detail::note(rep, span, refl, "t(refl) != q0");
  for (const ZigzagWord& w : enumerate_all(span, fam.bound())) {
    Vertex at = endpoint(span, w);
    if (at.side != Side::A) continue;
    auto wt = sec.values.find(w);
    if (wt == sec.values.end()) {
      ++rep.checked;
      detail::note(rep, span, w, "section undefined");
      continue;
    }
    const auto& tw = wt->second;
    for (EdgeId s : span.edges_at_a(at.index)) {
      ZigzagWord target = concat_fwd(span, w, s);
      if (target.size() > fam.bound()) continue;
      ++rep.checked;
      auto jt = sec.values.find(target);
      if (jt == sec.values.end()) {
        detail::note(rep, span, target, "section undefined");
        continue;
      }
      if (!(fam.transport(s, w, tw) == jt->second))
        detail::note(rep, span, w, "computation rule over " + span.edges()[s].label + " fails");
    }
  }
  return rep;
}

// Compares sec with elim_section(fam, q0) fiberwise.
template <DescentFamilyLike F>
SectionReport uniqueness_check(const FiniteSpan& span, const F& fam, const typename F::element_type& q0,
                               const Section<typename F::element_type>& sec) {
  SectionReport rep;
  auto canonical = elim_section(span, fam, q0);
  for (const auto& [w, value] : canonical.values) {
    ++rep.checked;
    auto it = sec.values.find(w);
    if (it == sec.values.end()) {
      detail::note(rep, span, w, "section undefined");
    } else if (!(it->second == value)) {
      detail::note(rep, span, w, "sections disagree");
    }
  }
  return rep;
}

struct EncodeDecodeReport {
  std::size_t identity_checked = 0;
  std::size_t naturality_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Eliminates into the identity family with q0 = refl; checks t(w) = w and
// t(w ∙ s) = t(w) ∙ s on every word of length <= bound - 1.
EncodeDecodeReport encode_decode(const FiniteSpan& span, std::size_t bound);

}  // namespace zigzag

#endif  // ZIGZAG_IDENTITY_SYSTEM_HPP
