#include "zigzag/identity_system.hpp"

#include <algorithm>
#include <numeric>

namespace zigzag {

Bijection Bijection::from_forward(FinMap forward) {
  Bijection b;
  b.inverse.assign(forward.size(), npos);
  for (std::size_t x = 0; x < forward.size(); ++x) {
    std::size_t y = forward[x];
    if (y >= forward.size() || b.inverse[y] != npos) throw DescentError("transition is not a bijection");
    b.inverse[y] = x;
  }
  b.forward = std::move(forward);
  return b;
}

Bijection Bijection::identity(std::size_t k) {
  FinMap id(k);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return from_forward(std::move(id));
}

void DescentFamily::set_fiber(const ZigzagWord& w, std::size_t size) {
  if (w.size() > bound_) throw DescentError("fiber outside the bound: " + to_string(*span_, w));
  fibers_[w] = size;
}

void DescentFamily::set_transition(EdgeId s, const ZigzagWord& w, FinMap forward) {
  ZigzagWord target = concat_fwd(*span_, w, s);
  if (forward.size() != fiber_size(w) || fiber_size(target) != fiber_size(w))
    throw DescentError("transition over " + span_->edges()[s].label + " at " + to_string(*span_, w) +
                       " does not match fiber sizes");
  transitions_[{s, w}] = Bijection::from_forward(std::move(forward));
}

std::size_t DescentFamily::fiber_size(const ZigzagWord& w) const {
  auto it = fibers_.find(w);
  if (it == fibers_.end()) throw DescentError("fiber missing over " + to_string(*span_, w) + " (bound too small?)");
  return it->second;
}

const Bijection& DescentFamily::transition(EdgeId s, const ZigzagWord& w) const {
  auto it = transitions_.find({s, w});
  if (it == transitions_.end())
    throw DescentError("transition over " + span_->edges()[s].label + " missing at " + to_string(*span_, w));
  return it->second;
}

std::size_t DescentFamily::transport(EdgeId s, const ZigzagWord& w, std::size_t e) const {
  return transition(s, w).forward.at(e);
}

std::size_t DescentFamily::transport_inv(EdgeId s, const ZigzagWord& w, std::size_t e) const {
  return transition(s, w).inverse.at(e);
}

DescentFamily DescentFamily::generate(const FiniteSpan& span, std::size_t bound, const SizeFn& size,
                                      const TransitionFn& transition) {
  DescentFamily fam(span, bound);
  auto words = enumerate_all(span, bound);
  for (const auto& w : words) fam.set_fiber(w, size(w));
  for (const auto& w : words) {
    Vertex at = endpoint(span, w);
    if (at.side != Side::A) continue;
    for (EdgeId s : span.edges_at_a(at.index)) {
      if (concat_fwd(span, w, s).size() > bound) continue;
      fam.set_transition(s, w, transition(s, w, fam.fiber_size(w)));
    }
  }
  return fam;
}

DescentFamily trivial_family(const FiniteSpan& span, std::size_t bound) {
  return DescentFamily::generate(
      span, bound, [](const ZigzagWord&) { return std::size_t{1}; },
      [](EdgeId, const ZigzagWord&, std::size_t k) { return Bijection::identity(k).forward; });
}

DescentFamily parity_family(const FiniteSpan& span, std::size_t bound, EdgeId edge) {
  return DescentFamily::generate(
      span, bound, [](const ZigzagWord&) { return std::size_t{2}; },
      [edge](EdgeId s, const ZigzagWord&, std::size_t) { return s == edge ? FinMap{1, 0} : FinMap{0, 1}; });
}

DescentFamily winding_family(const FiniteSpan& span, std::size_t bound, EdgeId edge) {
  const std::size_t k = 2 * bound + 1;
  return DescentFamily::generate(
      span, bound, [k](const ZigzagWord&) { return k; },
      [edge](EdgeId s, const ZigzagWord&, std::size_t size) {
        FinMap m(size);
        for (std::size_t x = 0; x < size; ++x) m[x] = s == edge ? (x + 1) % size : x;
        return m;
      });
}

DescentFamily random_family(const FiniteSpan& span, std::size_t bound, std::size_t max_fiber,
                            std::mt19937_64& rng) {
  // Transitions connect every fiber within the bound, so all sizes agree.
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_fiber))(rng);
  return DescentFamily::generate(
      span, bound, [k](const ZigzagWord&) { return k; },
      [&rng](EdgeId, const ZigzagWord&, std::size_t size) {
        FinMap m(size);
        std::iota(m.begin(), m.end(), std::size_t{0});
        std::shuffle(m.begin(), m.end(), rng);
        return m;
      });
}

bool IdentityFamily::contains(const ZigzagWord& w, const ZigzagWord& e) const {
  try {
    validate(*span_, e);
  } catch (const WordError&) {
    return false;
  }
  return is_reduced(e) && endpoint(*span_, e) == endpoint(*span_, w);
}

EncodeDecodeReport encode_decode(const FiniteSpan& span, std::size_t bound) {
  EncodeDecodeReport rep;
  IdentityFamily fam(span, bound);
  auto sec = elim_section(span, fam, ZigzagWord{});
  for (const auto& [w, tw] : sec.values) {
    if (w.size() + 1 > bound) continue;
    ++rep.identity_checked;
    if (tw != w) rep.failures.push_back("t(w) != w at " + to_string(span, w));
    Vertex at = endpoint(span, w);
    if (at.side != Side::A) continue;
    for (EdgeId s : span.edges_at_a(at.index)) {
      ++rep.naturality_checked;
      ZigzagWord moved = concat_fwd(span, w, s);
      if (sec.at(moved) != concat_fwd(span, tw, s))
        rep.failures.push_back("naturality over " + span.edges()[s].label + " fails at " + to_string(span, w));
    }
  }
  return rep;
}

}  // namespace zigzag
