#include "zigzag/stages.hpp"

#include <algorithm>

namespace zigzag {

PushoutPi0 pushout_pi0(const SpanInstance& sp) {
  if (sp.lmap.size() != sp.middle || sp.rmap.size() != sp.middle) throw DiagramError("span maps must be total");
  UnionFind uf(sp.left + sp.right);
  for (std::size_t m = 0; m < sp.middle; ++m) {
    if (sp.lmap[m] >= sp.left || sp.rmap[m] >= sp.right) throw DiagramError("span map value out of range");
    uf.unite(sp.lmap[m], sp.left + sp.rmap[m]);
  }
  return PushoutPi0{QuotientSet::seal(uf), sp.left};
}

FinMap cogap_set(const SpanInstance& sp, const PushoutPi0& po, const FinMap& i, const FinMap& j) {
  if (i.size() != sp.left || j.size() != sp.right) throw CoconeError("cocone legs have the wrong domain");
  for (std::size_t m = 0; m < sp.middle; ++m) {
    if (i[sp.lmap[m]] != j[sp.rmap[m]])
      throw CoconeError("cocone is inconsistent at middle element " + std::to_string(m));
  }
  FinMap out(po.quotient.num_classes(), npos);
  for (std::size_t x = 0; x < sp.left; ++x) out[po.inl(x)] = i[x];
  for (std::size_t y = 0; y < sp.right; ++y) out[po.inr(y)] = j[y];
  return out;
}

std::size_t Fiber::num_left() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.kind != Cell::Kind::Inr; }));
}

SpanInstance Fiber::span_instance() const {
  SpanInstance sp;
  sp.left = num_left();
  sp.right = cells.size() - sp.left;
  sp.middle = glue.size();
  for (const GlueEdge& e : glue) {
    sp.lmap.push_back(e.left_cell);
    sp.rmap.push_back(e.right_cell - sp.left);
  }
  return sp;
}

namespace {

// Builds one successor fiber: left cells inl(p) for each previous class p,
// right cells inr(s, q) for each s in `edges` and q < right_sizes[k], glued
// along `glue_target(s, p)` = the right element identified with inl(p).
template <typename GlueTarget>
Fiber successor_fiber(std::size_t num_edges, std::size_t prev_classes, const std::vector<EdgeId>& edges,
                      const std::vector<std::size_t>& right_sizes, GlueTarget glue_target) {
  Fiber fib;
  fib.inr_begin.assign(num_edges, npos);
  for (std::size_t p = 0; p < prev_classes; ++p) fib.cells.push_back(Cell{Cell::Kind::Inl, 0, p});
  for (std::size_t k = 0; k < edges.size(); ++k) {
    fib.inr_begin[edges[k]] = fib.cells.size();
    for (std::size_t q = 0; q < right_sizes[k]; ++q) fib.cells.push_back(Cell{Cell::Kind::Inr, edges[k], q});
  }
  for (EdgeId s : edges) {
    for (std::size_t p = 0; p < prev_classes; ++p) {
      fib.glue.push_back(GlueEdge{s, p, p, fib.inr_begin[s] + glue_target(s, p)});
    }
  }
  PushoutPi0 po = pushout_pi0(fib.span_instance());
  fib.classes = po.quotient;
  fib.incl.resize(prev_classes);
  for (std::size_t p = 0; p < prev_classes; ++p) fib.incl[p] = po.inl(p);
  return fib;
}

}  // namespace

FinMap bridge_fwd(const FiniteSpan& span, const Stages& stages, std::size_t n, EdgeId s) {
  if (n + 1 >= stages.size()) throw std::out_of_range("bridge_fwd needs stage n+1");
  const Fiber& source = stages[n].pa[span.f(s)];
  const Fiber& target = stages[n + 1].pb[span.g(s)];
  FinMap out(source.num_classes());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = target.inr_class(s, p);
  return out;
}

Stages build_stages(const FiniteSpan& span, std::size_t max_stage) {
  const std::size_t E = span.num_edges();
  Stages stages;

  StageFamily zero;
  zero.n = 0;
  for (std::size_t b = 0; b < span.num_b(); ++b) {
    Fiber fib;
    fib.inr_begin.assign(E, npos);
    fib.classes = QuotientSet::discrete(0);
    zero.pb.push_back(std::move(fib));
  }
  for (std::uint32_t a = 0; a < span.num_a(); ++a) {
    Fiber fib;
    fib.inr_begin.assign(E, npos);
    if (a == span.basepoint()) fib.cells.push_back(Cell{Cell::Kind::Refl, 0, 0});
    fib.classes = QuotientSet::discrete(fib.cells.size());
    zero.pa.push_back(std::move(fib));
  }
  zero.concat_bwd_stage.assign(E, FinMap{});
  stages.push_back(std::move(zero));

  for (std::size_t n = 0; n < max_stage; ++n) {
    const StageFamily& prev = stages[n];
    StageFamily next;
    next.n = n + 1;

    // P_B^{n+1}(b): χ(s, p) = (s, p ∙ₙ s̄)
    for (std::uint32_t b = 0; b < span.num_b(); ++b) {
      const auto& edges = span.edges_at_b(b);
      std::vector<std::size_t> right_sizes;
      for (EdgeId s : edges) right_sizes.push_back(prev.pa[span.f(s)].num_classes());
      next.pb.push_back(successor_fiber(E, prev.pb[b].num_classes(), edges, right_sizes,
                                        [&](EdgeId s, std::size_t p) { return prev.concat_bwd_stage[s][p]; }));
    }

    // P_A^{n+1}(a): θ(s, p) = (s, inr(s, p)) with inr into P_B^{n+1}(g s)
    for (std::uint32_t a = 0; a < span.num_a(); ++a) {
      const auto& edges = span.edges_at_a(a);
      std::vector<std::size_t> right_sizes;
      for (EdgeId s : edges) right_sizes.push_back(next.pb[span.g(s)].num_classes());
      next.pa.push_back(successor_fiber(E, prev.pa[a].num_classes(), edges, right_sizes,
                                        [&](EdgeId s, std::size_t p) { return next.pb[span.g(s)].inr_class(s, p); }));
    }

    // p ∙_{n+1} s̄ := inr(s, p) in P_A^{n+1}(f s)
    next.concat_bwd_stage.resize(E);
    for (EdgeId s = 0; s < E; ++s) {
      const Fiber& src = next.pb[span.g(s)];
      const Fiber& tgt = next.pa[span.f(s)];
      FinMap m(src.num_classes());
      for (std::size_t x = 0; x < m.size(); ++x) m[x] = tgt.inr_class(s, x);
      next.concat_bwd_stage[s] = std::move(m);
    }
    stages.push_back(std::move(next));
  }

  // –∙ₙs is defined after the recursion, as the right point constructor at each stage.
  for (std::size_t n = 0; n + 1 < stages.size(); ++n) {
    stages[n].concat_fwd_stage.resize(E);
    for (EdgeId s = 0; s < E; ++s) stages[n].concat_fwd_stage[s] = bridge_fwd(span, stages, n, s);
  }
  return stages;
}

std::vector<FiberCycles> cycle_diagnostic(const FiniteSpan& span, const Stages& stages, std::size_t n) {
  const StageFamily& st = stages.at(n);
  std::vector<FiberCycles> out;
  auto add = [&](Vertex v, const Fiber& fib) {
    FiberCycles fc{v, fib.cells.size(), fib.glue.size(), fib.num_classes(), 0};
    fc.cycles = fc.glue + fc.components - fc.cells;
    out.push_back(fc);
  };
  for (std::uint32_t a = 0; a < span.num_a(); ++a) add(Vertex{Side::A, a}, st.pa[a]);
  for (std::uint32_t b = 0; b < span.num_b(); ++b) add(Vertex{Side::B, b}, st.pb[b]);
  return out;
}

const FiberBijection& BijectionReport::fiber(Vertex v) const {
  for (const auto& f : fibers)
    if (f.fiber == v) return f;
  throw std::out_of_range("no such fiber");
}

BijectionReport stage_word_bijection(const FiniteSpan& span, const Stages& stages, std::size_t n) {
  if (n >= stages.size()) throw std::out_of_range("stage not built");
  BijectionReport rep;
  rep.n = n;

  // Interned words; cocones take values in word ids.
  std::map<ZigzagWord, std::size_t> ids;
  std::vector<ZigzagWord> words;
  auto intern = [&](ZigzagWord w) {
    auto [it, fresh] = ids.try_emplace(w, words.size());
    if (fresh) words.push_back(std::move(w));
    return it->second;
  };
  auto fail = [&](std::string msg) { rep.mismatches.push_back(std::move(msg)); };
  auto name = [&](Vertex v) { return std::string(v.side == Side::A ? "P_A" : "P_B") + "(" + span.label(v) + ")"; };

  // word ids per class, per stage
  std::vector<std::vector<FinMap>> word_a(n + 1), word_b(n + 1);
  word_a[0].assign(span.num_a(), FinMap{});
  word_b[0].assign(span.num_b(), FinMap{});
  word_a[0][span.basepoint()] = FinMap{intern(ZigzagWord{})};

  for (std::size_t m = 1; m <= n; ++m) {
    const StageFamily& st = stages[m];
    auto class_words = [&](Vertex v, const Fiber& fib, const FinMap& prev_words, auto right_word) -> FinMap {
      SpanInstance sp = fib.span_instance();
      FinMap i(sp.left), j(sp.right);
      for (std::size_t x = 0; x < sp.left; ++x) i[x] = prev_words[x];
      for (std::size_t y = 0; y < sp.right; ++y) {
        const Cell& c = fib.cells[sp.left + y];
        j[y] = right_word(c.edge, c.source);
      }
      PushoutPi0 po{fib.classes, sp.left};
      try {
        return cogap_set(sp, po, i, j);
      } catch (const CoconeError& e) {
        fail("stage " + std::to_string(m) + " " + name(v) + ": word cocone inconsistent: " + e.what());
        return FinMap(fib.num_classes(), npos);
      }
    };
    word_b[m].resize(span.num_b());
    for (std::uint32_t b = 0; b < span.num_b(); ++b) {
      word_b[m][b] = class_words(Vertex{Side::B, b}, st.pb[b], word_b[m - 1][b], [&](EdgeId s, std::size_t q) {
        std::size_t w = word_a[m - 1][span.f(s)][q];
        if (w == npos) return npos;
        try {
          return intern(concat_fwd(span, words[w], s));
        } catch (const WordError&) {
          return npos;
        }
      });
    }
    word_a[m].resize(span.num_a());
    for (std::uint32_t a = 0; a < span.num_a(); ++a) {
      word_a[m][a] = class_words(Vertex{Side::A, a}, st.pa[a], word_a[m - 1][a], [&](EdgeId s, std::size_t x) {
        std::size_t w = word_b[m][span.g(s)][x];
        if (w == npos) return npos;
        try {
          return intern(concat_bwd(span, words[w], s));
        } catch (const WordError&) {
          return npos;
        }
      });
    }
  }

  // Independent side: enumerate reduced words, bucketed by endpoint.
  const std::size_t max_len = 2 * n;
  std::map<Vertex, std::vector<ZigzagWord>> expected;
  for (auto& w : enumerate_all(span, max_len)) {
    Vertex e = endpoint(span, w);
    if (e.side == Side::B && w.size() + 1 > 2 * n) continue;
    expected[e].push_back(std::move(w));
  }

  auto compare = [&](Vertex v, const FinMap& class_words) {
    FiberBijection fb;
    fb.fiber = v;
    const auto& exp = expected[v];
    fb.word_count = exp.size();
    bool ok = true;
    std::vector<ZigzagWord> got;
    for (std::size_t c = 0; c < class_words.size(); ++c) {
      if (class_words[c] == npos) {
        ok = false;
        fb.word_of_class.emplace_back();
        continue;
      }
      fb.word_of_class.push_back(words[class_words[c]]);
      got.push_back(words[class_words[c]]);
    }
    std::sort(got.begin(), got.end());
    if (std::adjacent_find(got.begin(), got.end()) != got.end()) {
      ok = false;
      fail("stage " + std::to_string(n) + " " + name(v) + ": two classes share a word");
    }
    if (got != exp) {
      ok = false;
      fail("stage " + std::to_string(n) + " " + name(v) + ": " + std::to_string(class_words.size()) + " classes vs " +
           std::to_string(exp.size()) + " words");
    }
    fb.ok = ok;
    rep.fibers.push_back(std::move(fb));
  };
  for (std::uint32_t a = 0; a < span.num_a(); ++a) compare(Vertex{Side::A, a}, word_a[n][a]);
  for (std::uint32_t b = 0; b < span.num_b(); ++b) compare(Vertex{Side::B, b}, word_b[n][b]);

  // Naturality squares against the word operations, at every stage up to n.
  auto word_at = [&](const FinMap& table, std::size_t c) -> const ZigzagWord* {
    return table.at(c) == npos ? nullptr : &words[table[c]];
  };
  for (std::size_t m = 0; m <= n; ++m) {
    const StageFamily& st = stages[m];
    if (m >= 1) {
      for (std::uint32_t a = 0; a < span.num_a(); ++a)
        for (std::size_t p = 0; p < st.pa[a].incl.size(); ++p) {
          auto x = word_at(word_a[m - 1][a], p), y = word_at(word_a[m][a], st.pa[a].incl[p]);
          if (!x || !y || *x != *y) fail("incl_A square fails at stage " + std::to_string(m));
        }
      for (std::uint32_t b = 0; b < span.num_b(); ++b)
        for (std::size_t p = 0; p < st.pb[b].incl.size(); ++p) {
          auto x = word_at(word_b[m - 1][b], p), y = word_at(word_b[m][b], st.pb[b].incl[p]);
          if (!x || !y || *x != *y) fail("incl_B square fails at stage " + std::to_string(m));
        }
    }
    for (EdgeId s = 0; s < span.num_edges(); ++s) {
      const auto& cbs = st.concat_bwd_stage[s];
      for (std::size_t x = 0; x < cbs.size(); ++x) {
        auto w = word_at(word_b[m][span.g(s)], x), img = word_at(word_a[m][span.f(s)], cbs[x]);
        if (!w || !img || concat_bwd(span, *w, s) != *img)
          fail("concat_bwd square fails at stage " + std::to_string(m) + " edge " + span.edges()[s].label);
      }
      if (m + 1 <= n && !st.concat_fwd_stage.empty()) {
        const auto& cfs = st.concat_fwd_stage[s];
        for (std::size_t x = 0; x < cfs.size(); ++x) {
          auto w = word_at(word_a[m][span.f(s)], x), img = word_at(word_b[m + 1][span.g(s)], cfs[x]);
          if (!w || !img || concat_fwd(span, *w, s) != *img)
            fail("concat_fwd square fails at stage " + std::to_string(m) + " edge " + span.edges()[s].label);
        }
      }
    }
  }
  return rep;
}

FinSeqDiagram stage_diagram(const Stages& stages, Vertex v) {
  std::vector<std::size_t> sizes;
  std::vector<FinMap> maps;
  for (std::size_t n = 0; n < stages.size(); ++n) {
    const Fiber& fib = v.side == Side::A ? stages[n].pa.at(v.index) : stages[n].pb.at(v.index);
    sizes.push_back(fib.num_classes());
    if (n > 0) maps.push_back(fib.incl);
  }
  return FinSeqDiagram(std::move(sizes), std::move(maps));
}

SeqZigzag construction_zigzag(const FiniteSpan& span, const Stages& stages, EdgeId s) {
  if (stages.size() < 2) throw DiagramError("construction zigzag needs at least stages 0 and 1");
  const std::size_t N = stages.size() - 2;
  FinSeqDiagram left = stage_diagram(stages, Vertex{Side::A, span.f(s)}).truncated(N);
  FinSeqDiagram right = stage_diagram(stages, Vertex{Side::B, span.g(s)}).shifted();
  std::vector<FinMap> fwd, bwd;
  for (std::size_t n = 0; n <= N; ++n) fwd.push_back(stages[n].concat_fwd_stage.at(s));
  for (std::size_t n = 0; n < N; ++n) bwd.push_back(stages[n + 1].concat_bwd_stage.at(s));
  return SeqZigzag(std::move(left), std::move(right), std::move(fwd), std::move(bwd));
}

}  // namespace zigzag
