// Command-line front end: analyze, enumerate, verify, example, clique,
// ramsey-replay. Exit codes: 0 success, 1 check failure, 2 usage/input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semichain/cayley_table.hpp"
#include "semichain/enumerate.hpp"
#include "semichain/families.hpp"
#include "semichain/order.hpp"
#include "semichain/ramsey.hpp"
#include "semichain/sgt.hpp"
#include "semichain/structure.hpp"
#include "semichain/verify.hpp"

namespace {

using namespace semichain;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_usage = 2;

json set_json(const ElementSet& s) {
  json out = json::array();
  for (Element x : s) {
    out.push_back(x);
  }
  return out;
}

std::string hex16(std::uint64_t v) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

// Every subcommand that reads a table validates it up front; a parse error
// or a non-associative table is an input error, not a check failure.
CayleyTable load_checked(const std::string& path) {
  CayleyTable table = [&] {
    try {
      return load_sgt(path);
    } catch (const SgtParseError& e) {
      throw std::invalid_argument(path + ": " + e.what());
    }
  }();
  AssocCheck check = validate_associativity(table);
  if (!check) {
    if (check.status == AssocCheck::Status::malformed) {
      throw std::invalid_argument(path + ": entry out of range at row " +
                                  std::to_string(check.row) + ", col " +
                                  std::to_string(check.col));
    }
    throw std::invalid_argument(
        path + ": operation is not associative: (" + table.label(check.x) + "*" +
        table.label(check.y) + ")*" + table.label(check.z) + " != " + table.label(check.x) +
        "*(" + table.label(check.y) + "*" + table.label(check.z) + ")");
  }
  return table;
}

MaxCliqueOptions clique_options_from_env() {
  MaxCliqueOptions options;
  if (const char* text = std::getenv("SEMICHAIN_NODE_BUDGET")) {
    char* end = nullptr;
    long long value = std::strtoll(text, &end, 10);
    if (end == text || *end != '\0' || value <= 0) {
      throw std::invalid_argument("SEMICHAIN_NODE_BUDGET must be a positive integer, got '" +
                                  std::string(text) + "'");
    }
    options.node_budget = value;
  }
  return options;
}

void write_text_or_file(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << text;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  std::string path;
  bool as_json = false;
};

int run_analyze(const AnalyzeOpts& opt) {
  const CayleyTable t = load_checked(opt.path);
  const MaxCliqueOptions budget = clique_options_from_env();
  const ElementSet idem = idempotents(t);
  const FiberDecomposition fibers = fiber_decomposition(t);
  const std::vector<HClass> hclasses = h_class_partition(t);
  const CliqueResult chain = max_chain_clique(t, budget);
  const CliqueResult anti = max_antichain_clique(t, budget);

  if (opt.as_json) {
    json profiles = json::array();
    for (Element x = 0; x < t.order(); ++x) {
      PowerProfile p = power_profile(t, x);
      profiles.push_back({{"element", x},
                          {"index", p.index},
                          {"period", p.period},
                          {"idempotent_power", p.idempotent_power}});
    }
    json fiber_list = json::array();
    for (const auto& [e, members] : fibers.fibers) {
      fiber_list.push_back({{"idempotent", e}, {"members", set_json(members)}});
    }
    json hclass_list = json::array();
    for (const HClass& h : hclasses) {
      hclass_list.push_back({{"representative", h.representative}, {"members", set_json(h.members)}});
    }
    json doc = {{"order", t.order()},
                {"idempotents", set_json(idem)},
                {"power_profiles", std::move(profiles)},
                {"fibers", std::move(fiber_list)},
                {"hclasses", std::move(hclass_list)},
                {"max_chain", {{"size", chain.members.size()}, {"witness", set_json(chain.members)}}},
                {"max_antichain",
                 {{"size", anti.members.size()}, {"witness", set_json(anti.members)}}}};
    std::cout << doc.dump(2) << "\n";
    return exit_ok;
  }

  std::cout << "order: " << t.order() << "\n";
  std::cout << "idempotents (" << idem.size() << "): " << t.label_set(idem) << "\n";
  std::cout << "power profiles:\n";
  for (Element x = 0; x < t.order(); ++x) {
    PowerProfile p = power_profile(t, x);
    std::cout << "  " << std::setw(3) << t.label(x) << "  index=" << p.index
              << " period=" << p.period << " idempotent=" << t.label(p.idempotent_power) << "\n";
  }
  std::cout << "fibers:\n";
  for (const auto& [e, members] : fibers.fibers) {
    std::cout << "  e=" << t.label(e) << ": " << t.label_set(members) << " (size "
              << members.size() << ")\n";
  }
  std::cout << "H-classes:\n";
  for (const HClass& h : hclasses) {
    std::cout << "  H(" << t.label(h.representative) << "): " << t.label_set(h.members)
              << " (size " << h.members.size() << ")\n";
  }
  std::cout << "max chain: " << chain.members.size() << " witness " << t.label_set(chain.members)
            << "\n";
  std::cout << "max antichain: " << anti.members.size() << " witness "
            << t.label_set(anti.members) << "\n";
  return exit_ok;
}

// -------------------------------------------------------------- enumerate

struct EnumerateOpts {
  int order = 0;
  std::string symmetry = "iso-anti";
  bool count_only = false;
  std::string out_dir;
};

int run_enumerate(const EnumerateOpts& opt) {
  const Symmetry symmetry = opt.symmetry == "iso" ? Symmetry::iso : Symmetry::iso_and_anti;
  if (!opt.out_dir.empty()) {
    std::filesystem::create_directories(opt.out_dir);
  }
  int count = 0;
  enumerate_semigroups(opt.order, symmetry, [&](const CayleyTable& t) {
    if (!opt.count_only) {
      std::string digest = hex16(canonical_digest(canonical_form(t, symmetry)));
      if (!opt.out_dir.empty()) {
        std::filesystem::path file = std::filesystem::path(opt.out_dir) /
                                     ("s" + std::to_string(opt.order) + "_" + digest + ".sgt");
        save_sgt(t, file.string());
      } else {
        std::cout << "# class " << count << " digest " << digest << "\n" << emit_sgt(t) << "\n";
      }
    }
    ++count;
  });
  if (opt.count_only) {
    std::cout << count << "\n";
  } else if (!opt.out_dir.empty()) {
    std::cout << "wrote " << count << " files to " << opt.out_dir << "\n";
  }
  return exit_ok;
}

// ----------------------------------------------------------------- verify

struct VerifyOpts {
  std::string corpus;
  std::string json_path;
  bool fail_fast = false;
  int jobs = 1;
};

int run_verify(const VerifyOpts& opt) {
  const Corpus corpus = build_corpus(opt.corpus);
  SuiteOptions suite_options;
  suite_options.fail_fast = opt.fail_fast;
  suite_options.jobs = opt.jobs;
  const SuiteResult result = run_suite(corpus, suite_options);

  for (const CorpusError& err : result.errors) {
    std::cerr << "error: " << err.entry << ": " << err.message << "\n";
  }
  const bool json_to_stdout = opt.json_path == "-";
  if (!json_to_stdout) {
    for (const LemmaReport& report : result.reports) {
      if (report.all_pass()) {
        std::cout << "ok    " << report.table_id << "  chain=" << report.stats.max_chain
                  << " antichain=" << report.stats.max_antichain
                  << " idempotents=" << report.stats.idempotent_count << "\n";
      } else {
        std::cout << "FAIL  " << report.table_id << " ";
        for (const CheckResult& check : report.checks) {
          if (!check.pass) {
            std::cout << " " << check.check_name;
          }
        }
        std::cout << "\n";
      }
    }
    std::cout << "tables=" << result.tables() << " checks=" << result.checks()
              << " failures=" << result.failures() << "\n";
  }
  if (!opt.json_path.empty()) {
    write_text_or_file(suite_to_json(result).dump(2) + "\n", opt.json_path);
  }
  if (!result.errors.empty()) {
    return exit_usage;
  }
  return result.failures() == 0 ? exit_ok : exit_check_failure;
}

// ---------------------------------------------------------------- example

struct ExampleOpts {
  int max_level = 0;
  std::string out_path;
  bool check = false;
};

int run_example(const ExampleOpts& opt) {
  const LevelTruncation tr = level_truncation(opt.max_level);
  const CayleyTable& t = tr.table;
  write_text_or_file(emit_sgt(t), opt.out_path);
  if (!opt.check) {
    return exit_ok;
  }

  const MaxCliqueOptions budget = clique_options_from_env();
  const int n = opt.max_level;
  const int top_even = 2 * (n / 2);
  const int expected_antichain = n == 1 ? 1 : top_even;
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    std::cout << name << ": " << (pass ? "pass" : "FAIL") << "  (" << detail << ")\n";
    all_pass = all_pass && pass;
  };

  report("semilattice", is_semilattice(t) && bool(validate_associativity(t)),
         "commutative, idempotent, associative");

  const int antichain = max_antichain_size(t, budget);
  report("bounded antichains", antichain == expected_antichain,
         "max antichain " + std::to_string(antichain) + ", expected " +
             std::to_string(expected_antichain));

  ElementSet top(t.order());
  for (int i = 0; i < t.order(); ++i) {
    if (tr.elements[i].level == top_even) {
      top.insert(i);
    }
  }
  report("long antichain witness", n < 2 || (is_antichain(t, top) && top.size() == top_even),
         "top even level " + std::to_string(top_even) + " gives size " +
             std::to_string(top.size()));

  const std::size_t cover = min_chain_cover(t).size();
  report("chain cover floor", static_cast<int>(cover) == antichain,
         "minimum chain cover " + std::to_string(cover) + " = max antichain");

  ElementSet odd_levels(t.order());
  for (int i = 0; i < t.order(); ++i) {
    if (tr.elements[i].level % 2 == 1) {
      odd_levels.insert(i);
    }
  }
  report("odd-level chain", is_chain(t, odd_levels),
         "levels 1,3,... form a chain of size " + std::to_string(odd_levels.size()));

  bool retract_ok = true;
  std::string retract_detail = "r(ab) = r(a)r(b) on all pairs; fiber sizes";
  std::vector<int> r(t.order());
  for (int i = 0; i < t.order(); ++i) {
    r[i] = tr.index_of(level_retract(tr.elements[i]));
    retract_ok = retract_ok && r[i] >= 0;
  }
  for (int a = 0; a < t.order() && retract_ok; ++a) {
    for (int b = 0; b < t.order(); ++b) {
      if (r[t.at(a, b)] != t.at(r[a], r[b])) {
        retract_ok = false;
        retract_detail = "not a homomorphism at (" + t.label(a) + ", " + t.label(b) + ")";
        break;
      }
    }
  }
  for (int k = 1; 2 * k - 1 <= n && retract_ok; ++k) {
    const int target = tr.index_of({2 * k - 1, 0});
    int size = 0;
    for (int i = 0; i < t.order(); ++i) {
      size += r[i] == target ? 1 : 0;
    }
    const int expected = 2 * k <= n ? 2 * k + 1 : 1;
    retract_detail += " " + std::to_string(size);
    if (size != expected) {
      retract_ok = false;
      retract_detail += " (expected " + std::to_string(expected) + " over level " +
                        std::to_string(2 * k - 1) + ")";
    }
  }
  report("retraction homomorphism", retract_ok, retract_detail);

  return all_pass ? exit_ok : exit_check_failure;
}

// ----------------------------------------------------------------- clique

struct CliqueOpts {
  std::string path;
  std::string mode = "chain";
  long long budget = MaxCliqueOptions{}.node_budget;
  bool budget_set = false;
  bool as_json = false;
};

int run_clique(const CliqueOpts& opt) {
  const CayleyTable t = load_checked(opt.path);
  const CompatGraph g = opt.mode == "chain" ? chain_graph(t) : antichain_graph(t);
  // An explicit --budget wins; otherwise SEMICHAIN_NODE_BUDGET, loudly
  // rejected when malformed rather than silently ignored.
  MaxCliqueOptions options = opt.budget_set ? MaxCliqueOptions{} : clique_options_from_env();
  if (opt.budget_set) options.node_budget = opt.budget;
  CliqueResult result{ElementSet(t.order()), {}, 0};
  try {
    result = max_clique(g, options);
  } catch (const CliqueBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "best so far: " << t.label_set(e.best.members) << "\n";
    return exit_check_failure;
  }
  if (opt.as_json) {
    json doc = {{"mode", opt.mode},
                {"vertices", g.vertex_count()},
                {"edges", g.edges().size()},
                {"clique",
                 {{"size", result.members.size()},
                  {"members", set_json(result.members)},
                  {"nodes", result.nodes}}}};
    std::cout << doc.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "graph: mode=" << opt.mode << " vertices=" << g.vertex_count()
            << " edges=" << g.edges().size() << "\n";
  std::cout << "max clique: size=" << result.members.size() << " members="
            << t.label_set(result.members) << " nodes=" << result.nodes << "\n";
  return exit_ok;
}

// ---------------------------------------------------------- ramsey-replay

struct RamseyOpts {
  std::string path;
  std::string mode;
  std::vector<int> elements;
  bool as_json = false;
};

int run_ramsey(const RamseyOpts& opt) {
  const CayleyTable t = load_checked(opt.path);
  std::vector<Element> es(opt.elements.begin(), opt.elements.end());
  if (es.empty()) {
    if (opt.mode != "chi6") {
      throw std::invalid_argument("chi5 needs --elements");
    }
    for (Element e : idempotents(t)) {
      es.push_back(e);
    }
  }
  const PairColoring coloring =
      opt.mode == "chi5" ? absorption_coloring(t, es) : idempotent_coloring(t, es);
  const MonochromaticSubset omega = greedy_monochromatic(coloring);

  // The pivot premise (first absorbs) is exactly color 1 of the idempotent
  // coloring, so the product chains are replayable on the extracted subset.
  std::vector<std::pair<int, ElementSet>> chains;
  std::vector<Element> sub;
  if (opt.mode == "chi6" && omega.color == 1 && omega.indices.size() >= 2) {
    for (int i : omega.indices) {
      sub.push_back(es[i]);
    }
    for (int k = 0; k + 1 < static_cast<int>(sub.size()); ++k) {
      chains.emplace_back(k, pivot_product_chain(t, sub, k));
    }
  }

  if (opt.as_json) {
    json pairs = json::array();
    for (int a = 0; a < coloring.item_count(); ++a) {
      for (int b = a + 1; b < coloring.item_count(); ++b) {
        pairs.push_back({{"n", a}, {"m", b}, {"color", coloring.color(a, b)}});
      }
    }
    json subset_elements = json::array();
    for (int i : omega.indices) {
      subset_elements.push_back(es[i]);
    }
    json chain_list = json::array();
    for (const auto& [k, members] : chains) {
      chain_list.push_back({{"k", k}, {"pivot", sub[k]}, {"members", set_json(members)}});
    }
    json doc = {{"mode", opt.mode},
                {"elements", es},
                {"pairs", std::move(pairs)},
                {"monochromatic",
                 {{"color", omega.color},
                  {"indices", omega.indices},
                  {"elements", std::move(subset_elements)},
                  {"guarantee", omega.guarantee}}},
                {"z_chains", std::move(chain_list)}};
    std::cout << doc.dump(2) << "\n";
    return exit_ok;
  }

  std::cout << "mode: " << opt.mode << "\n";
  std::cout << "elements (" << es.size() << "):";
  for (Element e : es) {
    std::cout << " " << t.label(e);
  }
  std::cout << "\n";
  const int count = coloring.item_count();
  if (count < 2) {
    std::cout << "no pairs to color\n";
  } else {
    std::cout << "pair colors (row n, column m):\n     ";
    for (int b = 1; b < count; ++b) {
      std::cout << std::setw(4) << b;
    }
    std::cout << "\n";
    for (int a = 0; a + 1 < count; ++a) {
      std::cout << std::setw(5) << a;
      for (int b = 1; b < count; ++b) {
        if (b <= a) {
          std::cout << std::setw(4) << ".";
        } else {
          std::cout << std::setw(4) << coloring.color(a, b);
        }
      }
      std::cout << "\n";
    }
  }
  std::cout << "monochromatic subset: color=" << omega.color << " size=" << omega.indices.size()
            << " indices={";
  for (std::size_t i = 0; i < omega.indices.size(); ++i) {
    std::cout << (i ? "," : "") << omega.indices[i];
  }
  std::cout << "} elements={";
  for (std::size_t i = 0; i < omega.indices.size(); ++i) {
    std::cout << (i ? "," : "") << t.label(es[omega.indices[i]]);
  }
  std::cout << "} guarantee=" << omega.guarantee << "\n";
  for (const auto& [k, members] : chains) {
    std::cout << "Z_" << k << " (pivot " << t.label(sub[k]) << "): " << t.label_set(members)
              << " chain ok\n";
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chain/antichain structure toolkit for finite semigroups"};
  app.require_subcommand(1);

  AnalyzeOpts analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "structural report for a multiplication table");
  analyze->add_option("path", analyze_opts.path, "input .sgt file")->required();
  analyze->add_flag("--json", analyze_opts.as_json, "emit JSON instead of text");

  EnumerateOpts enumerate_opts;
  auto* enumerate = app.add_subcommand("enumerate", "list semigroups of a given order up to symmetry");
  enumerate->add_option("--order", enumerate_opts.order, "table order")
      ->required()
      ->check(CLI::Range(1, 4));
  enumerate->add_option("--symmetry", enumerate_opts.symmetry, "iso or iso-anti")
      ->check(CLI::IsMember({"iso", "iso-anti"}));
  enumerate->add_flag("--count-only", enumerate_opts.count_only, "print only the class count");
  enumerate->add_option("--out", enumerate_opts.out_dir, "write one .sgt file per class here");

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "run the invariant checks over a corpus");
  verify->add_option("--corpus", verify_opts.corpus,
                     "comma-separated corpus terms (enum:N, stock:N, monogenic:S, "
                     "example:N, random:C:N:SEED, or .sgt paths)")
      ->required();
  verify->add_option("--json", verify_opts.json_path, "write the JSON report here ('-' = stdout)");
  verify->add_flag("--fail-fast", verify_opts.fail_fast, "stop after the first failing table");
  verify->add_option("--jobs", verify_opts.jobs, "worker threads")->check(CLI::Range(1, 256));

  ExampleOpts example_opts;
  auto* example = app.add_subcommand("example", "emit a layered-semilattice truncation");
  example->add_option("level", example_opts.max_level, "largest level to keep")
      ->required()
      ->check(CLI::Range(1, 1 << 20));
  example->add_option("--out", example_opts.out_path, "output path (default stdout)");
  example->add_flag("--check", example_opts.check,
                    "also verify the structural properties of the truncation");

  CliqueOpts clique_opts;
  auto* clique = app.add_subcommand("clique", "exact maximum chain/antichain via clique search");
  clique->add_option("path", clique_opts.path, "input .sgt file")->required();
  clique->add_option("--mode", clique_opts.mode, "chain or antichain")
      ->required()
      ->check(CLI::IsMember({"chain", "antichain"}));
  auto* budget_option = clique->add_option("--budget", clique_opts.budget,
                                           "search node budget (default from "
                                           "SEMICHAIN_NODE_BUDGET)")
                            ->check(CLI::PositiveNumber);
  clique->add_flag("--json", clique_opts.as_json, "emit JSON instead of text");

  RamseyOpts ramsey_opts;
  auto* ramsey = app.add_subcommand("ramsey-replay", "pair coloring and monochromatic extraction");
  ramsey->add_option("path", ramsey_opts.path, "input .sgt file")->required();
  ramsey->add_option("--mode", ramsey_opts.mode, "chi5 (absorption) or chi6 (idempotent pattern)")
      ->required()
      ->check(CLI::IsMember({"chi5", "chi6"}));
  ramsey->add_option("--elements", ramsey_opts.elements,
                     "comma-separated element indices (chi6 default: all idempotents)")
      ->delimiter(',');
  ramsey->add_flag("--json", ramsey_opts.as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  clique_opts.budget_set = budget_option->count() > 0;

  try {
    if (analyze->parsed()) return run_analyze(analyze_opts);
    if (enumerate->parsed()) return run_enumerate(enumerate_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (example->parsed()) return run_example(example_opts);
    if (clique->parsed()) return run_clique(clique_opts);
    if (ramsey->parsed()) return run_ramsey(ramsey_opts);
  } catch (const CliqueBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::logic_error& e) {
    // Disproved internal invariant: report as a failed check, loudly.
    std::cerr << "invariant violated: " << e.what() << "\n";
    return exit_check_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
