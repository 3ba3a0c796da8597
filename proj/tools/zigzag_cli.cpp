// zigzag: command-line front end for the staged path-space construction.
//
//   zigzag info <file>
//   zigzag stages <file> --up-to N
//   zigzag enumerate <file> --endpoint V --max-len L
//   zigzag reduce <file> --word "<word>"
//   zigzag limit <file> --up-to N --endpoint V
//   zigzag check <file> [--oracle] [--seed K] [--max-len L] [--stages N]
//
// Every command accepts --json. Exit status: 0 success, 1 check failure,
// 2 parse or usage error.

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/seq_colim.hpp"
#include "zigzag/span.hpp"
#include "zigzag/stages.hpp"
#include "zigzag/verify.hpp"
#include "zigzag/words.hpp"

using json = nlohmann::ordered_json;
using namespace zigzag;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vertex resolve_vertex(const FiniteSpan& span, const std::string& label) {
  auto v = span.find_vertex(label);
  if (!v) throw UsageError("unknown endpoint '" + label + "'");
  return *v;
}

std::string fiber_name(const FiniteSpan& span, Vertex v) {
  return std::string(v.side == Side::A ? "P_A(" : "P_B(") + span.label(v) + ")";
}

int cmd_info(const FiniteSpan& span, bool as_json) {
  RealizedGraph graph = realize(span);
  Vertex base{Side::A, span.basepoint()};
  Component comp = component_of(graph, base);
  std::size_t rank = oracle::pi1_rank(graph, base);
  std::vector<std::string> members;
  for (Vertex v : comp.vertices) members.push_back(span.label(v));
  if (as_json) {
    json j;
    j["A"] = span.num_a();
    j["B"] = span.num_b();
    j["S"] = span.num_edges();
    j["basepoint"] = span.label(base);
    j["component"] = members;
    j["component_edges"] = comp.num_edges;
    j["pi1_rank"] = rank;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "|A| = " << span.num_a() << "\n|B| = " << span.num_b() << "\n|S| = " << span.num_edges() << '\n';
  std::cout << "basepoint: " << span.label(base) << '\n';
  std::cout << "basepoint component:";
  for (const auto& m : members) std::cout << ' ' << m;
  std::cout << " (" << comp.num_edges << " edges)\n";
  std::cout << "pi1 rank: " << rank << '\n';
  return 0;
}

int cmd_stages(const FiniteSpan& span, std::size_t up_to, bool as_json) {
  Stages stages = build_stages(span, up_to);
  json rows = json::array();
  bool all_ok = true;
  for (std::size_t n = 0; n <= up_to; ++n) {
    auto cycles = cycle_diagnostic(span, stages, n);
    auto bij = stage_word_bijection(span, stages, n);
    all_ok &= bij.ok();
    json row;
    row["n"] = n;
    json fibers = json::object();
    std::size_t glue = 0, cyc = 0;
    for (const auto& fc : cycles) {
      fibers[fiber_name(span, fc.fiber)] = fc.components;
      glue += fc.glue;
      cyc += fc.cycles;
    }
    row["fibers"] = fibers;
    row["glue"] = glue;
    row["cycles"] = cyc;
    row["bijection"] = bij.ok() ? "ok" : bij.mismatches.front();
    rows.push_back(row);
  }
  if (as_json) {
    std::cout << json{{"stages", rows}}.dump(2) << '\n';
  } else {
    std::cout << std::left << std::setw(4) << "n";
    for (const auto& [name, _] : rows[0]["fibers"].items()) std::cout << std::setw(10) << name;
    std::cout << std::setw(8) << "glue" << std::setw(8) << "cycles" << "bijection\n";
    for (const auto& row : rows) {
      std::cout << std::setw(4) << row["n"].get<std::size_t>();
      for (const auto& [_, count] : row["fibers"].items()) std::cout << std::setw(10) << count.get<std::size_t>();
      std::cout << std::setw(8) << row["glue"].get<std::size_t>() << std::setw(8) << row["cycles"].get<std::size_t>()
                << row["bijection"].get<std::string>() << '\n';
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_enumerate(const FiniteSpan& span, const std::string& endpoint_label, std::size_t max_len, bool as_json) {
  auto words = enumerate(span, resolve_vertex(span, endpoint_label), max_len);
  if (as_json) {
    json arr = json::array();
    for (const auto& w : words) arr.push_back(to_string(span, w));
    std::cout << json{{"endpoint", endpoint_label}, {"max_len", max_len}, {"words", arr}}.dump(2) << '\n';
  } else {
    for (const auto& w : words) std::cout << to_string(span, w) << '\n';
  }
  return 0;
}

int cmd_reduce(const FiniteSpan& span, const std::string& text, bool as_json) {
  ZigzagWord w;
  try {
    w = parse_word(span, text);
  } catch (const WordError& e) {
    throw UsageError(e.what());
  }
  auto r = reduce_with(span, w, Strategy::LeftmostInnermost);
  if (as_json) {
    std::cout << json{{"input", to_string(span, w)},
                      {"normal_form", to_string(span, r.word)},
                      {"cancellations", r.cancellations},
                      {"endpoint", span.label(endpoint(span, r.word))}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << to_string(span, r.word) << '\n';
  }
  return 0;
}

int cmd_limit(const FiniteSpan& span, std::size_t up_to, const std::string& endpoint_label, bool as_json) {
  Vertex v = resolve_vertex(span, endpoint_label);
  Stages stages = build_stages(span, up_to);
  FinSeqDiagram diagram = stage_diagram(stages, v);
  DirectLimit lim = direct_limit(diagram);
  auto bij = stage_word_bijection(span, stages, up_to);
  const auto& words = bij.fiber(v).word_of_class;
  json reps = json::array();
  std::vector<std::string> lines;
  for (std::size_t c = 0; c < lim.num_classes(); ++c) {
    StagedElement r = lim.representative(c);
    // the representative's image at the top stage names the class as a word
    std::size_t x = r.element;
    for (std::size_t n = r.stage; n < up_to; ++n) x = diagram.map(n)[x];
    std::string word = x < words.size() ? to_string(span, words[x]) : "?";
    reps.push_back(json{{"stage", r.stage}, {"element", r.element}, {"word", word}});
    std::ostringstream line;
    line << "(" << r.stage << ", " << r.element << ")  " << word;
    lines.push_back(line.str());
  }
  if (as_json) {
    std::cout << json{{"endpoint", endpoint_label}, {"up_to", up_to}, {"classes", lim.num_classes()},
                      {"representatives", reps}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "classes: " << lim.num_classes() << '\n';
    for (const auto& l : lines) std::cout << l << '\n';
  }
  return 0;
}

int cmd_check(const FiniteSpan& span, const std::string& file, const CheckOptions& opt, bool as_json) {
  CheckSummary summary = run_checks(span, opt);
  if (as_json) {
    json checks = json::array();
    for (const auto& r : summary.results)
      checks.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::cout << json{{"file", file},
                      {"seed", opt.seed},
                      {"max_len", opt.max_len},
                      {"stages", opt.stages},
                      {"oracle", opt.oracle},
                      {"checks", checks},
                      {"passed", summary.passed()}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& r : summary.results)
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << '\n';
    std::cout << (summary.passed() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return summary.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zigzag construction of path spaces of pushouts of finite spans"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured output");

  std::string file, endpoint_label, word;
  std::size_t up_to = 0, max_len = 8;
  CheckOptions opt;

  auto* info = app.add_subcommand("info", "Cardinalities, basepoint component and pi1 rank");
  info->add_option("file", file, "Span file")->required();

  auto* stages = app.add_subcommand("stages", "Table of stage pushouts P_A^n, P_B^n");
  stages->add_option("file", file, "Span file")->required();
  stages->add_option("--up-to", up_to, "Last stage")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Reduced words from the basepoint, canonical order");
  enumerate_cmd->add_option("file", file, "Span file")->required();
  enumerate_cmd->add_option("--endpoint", endpoint_label, "Endpoint label")->required();
  enumerate_cmd->add_option("--max-len", max_len, "Maximal word length")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a word");
  reduce_cmd->add_option("file", file, "Span file")->required();
  reduce_cmd->add_option("--word", word, "Word such as \">s <t\" or refl")->required();

  auto* limit = app.add_subcommand("limit", "Direct limit of the stage diagram at an endpoint");
  limit->add_option("file", file, "Span file")->required();
  limit->add_option("--up-to", up_to, "Truncation bound")->required();
  limit->add_option("--endpoint", endpoint_label, "Endpoint label")->required();

  auto* check = app.add_subcommand("check", "Run all invariant suites");
  check->add_option("file", file, "Span file")->required();
  check->add_flag("--oracle", opt.oracle, "Also compare against the graph oracle");
  check->add_option("--seed", opt.seed, "Seed for randomized suites");
  check->add_option("--max-len", opt.max_len, "Word length bound");
  check->add_option("--stages", opt.stages, "Stage bound");

  for (auto* sub : {info, stages, enumerate_cmd, reduce_cmd, limit, check})
    sub->add_flag("--json", as_json, "Structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    FiniteSpan span = load_span(file);
    if (*info) return cmd_info(span, as_json);
    if (*stages) return cmd_stages(span, up_to, as_json);
    if (*enumerate_cmd) return cmd_enumerate(span, endpoint_label, max_len, as_json);
    if (*reduce_cmd) return cmd_reduce(span, word, as_json);
    if (*limit) return cmd_limit(span, up_to, endpoint_label, as_json);
    if (*check) return cmd_check(span, file, opt, as_json);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
