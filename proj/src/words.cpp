#include "zigzag/words.hpp"

#include <sstream>

namespace zigzag {

namespace {

bool cancels(const Step& x, const Step& y) { return x.edge == y.edge && x.dir != y.dir; }

// Vertex reached after taking step st from its source.
Vertex target_of(const FiniteSpan& span, const Step& st) {
  return st.dir == Dir::Fwd ? Vertex{Side::B, span.g(st.edge)} : Vertex{Side::A, span.f(st.edge)};
}

Vertex source_of(const FiniteSpan& span, const Step& st) {
  return st.dir == Dir::Fwd ? Vertex{Side::A, span.f(st.edge)} : Vertex{Side::B, span.g(st.edge)};
}

void require_endpoint(const FiniteSpan& span, const ZigzagWord& w, Vertex expected) {
  if (endpoint(span, w) != expected)
    throw WordError("endpoint mismatch: word ends at '" + span.label(endpoint(span, w)) + "', expected '" +
                    span.label(expected) + "'");
}

}  // namespace

void validate(const FiniteSpan& span, const ZigzagWord& w) {
  Vertex at{Side::A, span.basepoint()};
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const Step& st = w.steps[i];
    if (st.edge >= span.num_edges()) throw WordError("step " + std::to_string(i) + ": edge out of range");
    Dir expected = i % 2 == 0 ? Dir::Fwd : Dir::Bwd;
    if (st.dir != expected) throw WordError("step " + std::to_string(i) + ": directions must alternate from Fwd");
    if (source_of(span, st) != at)
      throw WordError("step " + std::to_string(i) + ": edge '" + span.edges()[st.edge].label + "' does not start at '" +
                      span.label(at) + "'");
    at = target_of(span, st);
  }
}

bool is_reduced(const ZigzagWord& w) {
  for (std::size_t i = 1; i < w.steps.size(); ++i)
    if (cancels(w.steps[i - 1], w.steps[i])) return false;
  return true;
}

Vertex endpoint(const FiniteSpan& span, const ZigzagWord& w) {
  if (w.empty()) return Vertex{Side::A, span.basepoint()};
  return target_of(span, w.steps.back());
}

ReductionResult reduce_with(const FiniteSpan& span, const ZigzagWord& w, Strategy strategy) {
  validate(span, w);
  ReductionResult r;
  if (strategy == Strategy::LeftmostInnermost) {
    // Stack scan: each pushed step cancels against the top if possible.
    for (const Step& st : w.steps) {
      if (!r.word.steps.empty() && cancels(r.word.steps.back(), st)) {
        r.word.steps.pop_back();
        ++r.cancellations;
      } else {
        r.word.steps.push_back(st);
      }
    }
  } else {
    // Mirror image: scan from the right, building the reversed normal form.
    std::vector<Step> rev;
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
      if (!rev.empty() && cancels(rev.back(), *it)) {
        rev.pop_back();
        ++r.cancellations;
      } else {
        rev.push_back(*it);
      }
    }
    r.word.steps.assign(rev.rbegin(), rev.rend());
  }
  return r;
}

ZigzagWord reduce(const FiniteSpan& span, const ZigzagWord& w) {
  return reduce_with(span, w, Strategy::LeftmostInnermost).word;
}

ZigzagWord concat_fwd(const FiniteSpan& span, const ZigzagWord& w, EdgeId s) {
  if (s >= span.num_edges()) throw WordError("edge out of range");
  require_endpoint(span, w, Vertex{Side::A, span.f(s)});
  ZigzagWord out = w;
  if (!out.empty() && out.steps.back() == bwd(s)) {
    out.steps.pop_back();
  } else {
    out.steps.push_back(fwd(s));
  }
  return out;
}

ZigzagWord concat_bwd(const FiniteSpan& span, const ZigzagWord& w, EdgeId s) {
  if (s >= span.num_edges()) throw WordError("edge out of range");
  require_endpoint(span, w, Vertex{Side::B, span.g(s)});
  ZigzagWord out = w;
  if (!out.empty() && out.steps.back() == fwd(s)) {
    out.steps.pop_back();
  } else {
    out.steps.push_back(bwd(s));
  }
  return out;
}

std::size_t stage_of(const ZigzagWord& w) { return (w.size() + 1) / 2; }

std::vector<ZigzagWord> enumerate_all(const FiniteSpan& span, std::size_t max_len) {
  // Breadth-first by length; extensions are tried in increasing edge order,
  // so each layer comes out in lexicographic order.
  std::vector<ZigzagWord> out{ZigzagWord{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 0; len < max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      Vertex at = endpoint(span, out[i]);
      const auto& candidates = at.side == Side::A ? span.edges_at_a(at.index) : span.edges_at_b(at.index);
      for (EdgeId s : candidates) {
        Step st = at.side == Side::A ? fwd(s) : bwd(s);
        if (!out[i].empty() && out[i].steps.back().edge == s) continue;
        ZigzagWord next = out[i];
        next.steps.push_back(st);
        out.push_back(std::move(next));
      }
    }
    layer_begin = layer_end;
    if (layer_begin == out.size()) break;
  }
  return out;
}

std::vector<ZigzagWord> enumerate(const FiniteSpan& span, Vertex target, std::size_t max_len) {
  if ((target.side == Side::A && target.index >= span.num_a()) ||
      (target.side == Side::B && target.index >= span.num_b()))
    throw WordError("unknown endpoint");
  std::vector<ZigzagWord> out;
  for (auto& w : enumerate_all(span, max_len))
    if (endpoint(span, w) == target) out.push_back(std::move(w));
  return out;
}

std::string to_string(const FiniteSpan& span, const ZigzagWord& w) {
  if (w.empty()) return "refl";
  std::string out;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    if (i) out += ' ';
    out += w.steps[i].dir == Dir::Fwd ? '>' : '<';
    out += span.edges().at(w.steps[i].edge).label;
  }
  return out;
}

ZigzagWord parse_word(const FiniteSpan& span, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "refl") return ZigzagWord{};
  if (toks.empty()) throw WordError("empty word (write 'refl')");
  ZigzagWord w;
  for (const auto& t : toks) {
    if (t.size() < 2 || (t[0] != '>' && t[0] != '<')) throw WordError("bad step '" + t + "'");
    auto s = span.find_edge(std::string_view(t).substr(1));
    if (!s) throw WordError("unknown edge '" + t.substr(1) + "'");
    w.steps.push_back(Step{t[0] == '>' ? Dir::Fwd : Dir::Bwd, *s});
  }
  validate(span, w);
  return w;
}

}  // namespace zigzag
