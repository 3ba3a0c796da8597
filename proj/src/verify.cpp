#include "zigzag/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zigzag/identity_system.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/seq_colim.hpp"
#include "zigzag/stages.hpp"

namespace zigzag {

bool CheckSummary::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

ZigzagWord random_word(const FiniteSpan& span, std::size_t max_len, std::mt19937_64& rng) {
  std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  ZigzagWord w;
  Vertex at{Side::A, span.basepoint()};
  for (std::size_t i = 0; i < len; ++i) {
    const auto& edges = at.side == Side::A ? span.edges_at_a(at.index) : span.edges_at_b(at.index);
    if (edges.empty()) break;
    EdgeId s = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    if (at.side == Side::A) {
      w.steps.push_back(fwd(s));
      at = Vertex{Side::B, span.g(s)};
    } else {
      w.steps.push_back(bwd(s));
      at = Vertex{Side::A, span.f(s)};
    }
  }
  return w;
}

namespace {

std::vector<Vertex> all_vertices(const FiniteSpan& span) {
  std::vector<Vertex> out;
  for (std::uint32_t a = 0; a < span.num_a(); ++a) out.push_back(Vertex{Side::A, a});
  for (std::uint32_t b = 0; b < span.num_b(); ++b) out.push_back(Vertex{Side::B, b});
  return out;
}

class Suite {
 public:
  explicit Suite(CheckSummary& summary) : summary_(summary) {}

  template <typename Body>
  void run(const std::string& name, Body body) {
    CheckResult r{name, true, ""};
    try {
      std::ostringstream detail;
      r.passed = body(detail);
      r.detail = detail.str();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    summary_.results.push_back(std::move(r));
  }

 private:
  CheckSummary& summary_;
};

}  // namespace

CheckSummary run_checks(const FiniteSpan& span, const CheckOptions& opt) {
  CheckSummary summary;
  Suite suite(summary);
  std::mt19937_64 rng(opt.seed);
  const std::size_t L = opt.max_len;
  const std::size_t N = opt.stages;
  const Vertex base{Side::A, span.basepoint()};

  suite.run("span.roundtrip", [&](std::ostream& out) {
    out << "|A|=" << span.num_a() << " |B|=" << span.num_b() << " |S|=" << span.num_edges();
    return parse_span(serialize_span(span)) == span;
  });

  suite.run("words.confluence", [&](std::ostream& out) {
    for (std::size_t i = 0; i < opt.random_words; ++i) {
      ZigzagWord w = random_word(span, 2 * L, rng);
      auto left = reduce_with(span, w, Strategy::LeftmostInnermost);
      auto right = reduce_with(span, w, Strategy::RightmostInnermost);
      if (left.word != right.word || !is_reduced(left.word) || 2 * left.cancellations > w.size() ||
          w.size() - left.word.size() != 2 * left.cancellations) {
        out << "strategies disagree on " << to_string(span, w);
        return false;
      }
    }
    out << opt.random_words << " random words";
    return true;
  });

  const auto words = enumerate_all(span, L);

  suite.run("words.mutual_inverse", [&](std::ostream& out) {
    std::size_t checked = 0;
    for (const auto& w : words) {
      Vertex at = endpoint(span, w);
      if (at.side == Side::A) {
        for (EdgeId s : span.edges_at_a(at.index)) {
          ++checked;
          if (concat_bwd(span, concat_fwd(span, w, s), s) != w) {
            out << "bwd∘fwd fails at " << to_string(span, w);
            return false;
          }
        }
      } else {
        for (EdgeId s : span.edges_at_b(at.index)) {
          ++checked;
          if (concat_fwd(span, concat_bwd(span, w, s), s) != w) {
            out << "fwd∘bwd fails at " << to_string(span, w);
            return false;
          }
        }
      }
    }
    out << checked << " composites";
    return true;
  });

  suite.run("words.enumeration_monotone", [&](std::ostream& out) {
    for (Vertex v : all_vertices(span)) {
      for (std::size_t len = 0; len < L; ++len) {
        auto small = enumerate(span, v, len);
        auto big = enumerate(span, v, len + 1);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
        for (const auto& w : big) {
          if (w.size() == len + 1) continue;
          if (!std::binary_search(small.begin(), small.end(), w)) {
            out << "unexpected word " << to_string(span, w);
            return false;
          }
        }
      }
    }
    out << "lengths 0.." << L;
    return true;
  });

  const Stages stages = build_stages(span, N + 1);

  suite.run("stages.zero_case", [&](std::ostream& out) {
    for (const auto& fib : stages[0].pb)
      if (fib.num_classes() != 0) return false;
    for (std::uint32_t a = 0; a < span.num_a(); ++a)
      if (stages[0].pa[a].num_classes() != (a == span.basepoint() ? 1u : 0u)) return false;
    out << "P_B^0 empty, P_A^0 = {refl} at a0";
    return true;
  });

  suite.run("stages.incl_injective", [&](std::ostream&) {
    for (std::size_t n = 1; n < stages.size(); ++n) {
      for (const auto* fibers : {&stages[n].pa, &stages[n].pb})
        for (const auto& fib : *fibers) {
          std::set<std::size_t> image(fib.incl.begin(), fib.incl.end());
          if (image.size() != fib.incl.size()) return false;
        }
    }
    return true;
  });

  suite.run("stages.word_bijection", [&](std::ostream& out) {
    for (std::size_t n = 0; n <= N; ++n) {
      auto rep = stage_word_bijection(span, stages, n);
      if (!rep.ok()) {
        out << rep.mismatches.front();
        return false;
      }
    }
    out << "stages 0.." << N << ", naturality included";
    return true;
  });

  suite.run("stages.cycle_diagnostic", [&](std::ostream& out) {
    std::size_t total = 0;
    for (std::size_t n = 0; n <= N; ++n)
      for (const auto& fc : cycle_diagnostic(span, stages, n)) total += fc.cycles;
    out << total << " independent cycles in gluing graphs up to stage " << N;
    return true;  // reported, not asserted
  });

  suite.run("colim.stage_limit_matches_words", [&](std::ostream& out) {
    for (Vertex v : all_vertices(span)) {
      FinSeqDiagram d = stage_diagram(stages, v).truncated(N);
      DirectLimit lim = direct_limit(d);
      std::size_t max_len = v.side == Side::A ? 2 * N : (N == 0 ? 0 : 2 * N - 1);
      std::size_t expected = N == 0 && v.side == Side::B ? 0 : enumerate(span, v, max_len).size();
      if (lim.num_classes() != expected) {
        out << span.label(v) << ": " << lim.num_classes() << " classes vs " << expected << " words";
        return false;
      }
    }
    return true;
  });

  suite.run("colim.zigzag_equivalence", [&](std::ostream& out) {
    if (N < 2) {
      out << "skipped: needs --stages >= 2";
      return true;
    }
    std::size_t safe = 0;
    for (EdgeId s = 0; s < span.num_edges(); ++s) {
      auto rep = zigzag_equivalence(construction_zigzag(span, stages, s));
      if (!rep.ok()) {
        out << span.edges()[s].label << ": " << rep.failures.front();
        return false;
      }
      safe += rep.safe_left + rep.safe_right;
    }
    out << safe << " truncation-safe classes";
    return true;
  });

  auto family_suite = [&](const std::string& name, const DescentFamily& fam, std::size_t q0) {
    suite.run(name, [&](std::ostream& out) {
      auto sec = elim_section(span, fam, q0);
      auto comp = check_computation(span, fam, q0, sec);
      auto uniq = uniqueness_check(span, fam, q0, sec);
      if (!comp.ok() || !uniq.ok()) {
        out << (comp.ok() ? uniq.violations.front() : comp.violations.front());
        return false;
      }
      out << sec.values.size() << " words";
      return true;
    });
  };
  const std::size_t marked = span.num_edges() == 0 ? 0 : static_cast<EdgeId>(span.num_edges() - 1);
  family_suite("identity.trivial", trivial_family(span, L), 0);
  if (span.num_edges() > 0) {
    family_suite("identity.parity", parity_family(span, L, marked), 0);
    family_suite("identity.winding", winding_family(span, L, marked), L);
  }
  for (std::size_t i = 0; i < opt.random_families; ++i) {
    DescentFamily fam = random_family(span, L, 3, rng);
    std::size_t q0 = std::uniform_int_distribution<std::size_t>(0, fam.fiber_size(ZigzagWord{}) - 1)(rng);
    family_suite("identity.random_" + std::to_string(i), fam, q0);
  }

  suite.run("identity.negative_control", [&](std::ostream& out) {
    if (words.size() < 2) {
      out << "skipped: no word besides refl";
      return true;
    }
    DescentFamily fam = parity_family(span, L, marked);
    auto sec = elim_section(span, fam, 0);
    const ZigzagWord& victim = words.back();
    sec.values[victim] ^= 1;
    auto comp = check_computation(span, fam, 0, sec);
    auto uniq = uniqueness_check(span, fam, 0, sec);
    out << "corrupted " << to_string(span, victim);
    return !comp.ok() && uniq.first_bad == victim;
  });

  suite.run("identity.encode_decode", [&](std::ostream& out) {
    auto rep = encode_decode(span, L);
    if (!rep.ok()) {
      out << rep.failures.front();
      return false;
    }
    out << rep.identity_checked << " words, " << rep.naturality_checked << " naturality squares";
    return true;
  });

  if (opt.oracle) {
    const RealizedGraph graph = realize(span);
    suite.run("oracle.words_vs_walks", [&](std::ostream& out) {
      std::size_t total = 0;
      for (Vertex v : all_vertices(span)) {
        auto rep = oracle::compare_words_walks(span, v, L);
        if (!rep.ok()) {
          out << span.label(v) << ": " << rep.first_mismatch;
          return false;
        }
        total += rep.words;
      }
      out << total << " words matched";
      return true;
    });
    suite.run("oracle.pi1_rank", [&](std::ostream& out) {
      Component c = component_of(graph, base);
      std::size_t rank = oracle::pi1_rank(graph, base);
      out << "rank " << rank;
      if (rank != c.num_edges + 1 - c.vertices.size()) return false;
      if (rank == 0) {
        for (Vertex v : c.vertices)
          if (enumerate(span, v, L).size() != 1) return false;
      }
      return true;
    });
  }
  return summary;
}

}  // namespace zigzag
