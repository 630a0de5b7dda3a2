#include "semichain/verify.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <thread>

#include "semichain/enumerate.hpp"
#include "semichain/families.hpp"
#include "semichain/order.hpp"
#include "semichain/sgt.hpp"
#include "semichain/structure.hpp"

namespace semichain {

bool LemmaReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

CheckResult check_hclass_antichain(const CayleyTable& table) {
  CheckResult out{"hclass_antichain"};
  for (Element e : idempotents(table)) {
    ElementSet rest = h_class(table, e).members;
    rest.erase(e);
#ifdef SEMICHAIN_CORRUPT_HCLASS_CHECK
    // Deliberately wrong variant, built only for the failure-path tests.
    auto bad = chain_violation(table, rest);
#else
    auto bad = antichain_violation(table, rest);
#endif
    if (bad) {
      out.pass = false;
      out.witness = {{"e", e},
                     {"x", bad->x},
                     {"y", bad->y},
                     {"xy", bad->xy},
                     {"note", "product of distinct H-class members absorbs an argument"}};
      return out;
    }
  }
  return out;
}

CheckResult check_fiber_absorption(const CayleyTable& table) {
  CheckResult out{"fiber_absorption"};
  const FiberDecomposition fibers = fiber_decomposition(table);
  for (Element e : idempotents(table)) {
    const ElementSet h = h_class(table, e).members;
    const ElementSet* fiber = fibers.find(e);
    for (Element x : *fiber) {
      for (Element y : h) {
        Element xy = table.at(x, y);
        Element yx = table.at(y, x);
        if (!h.contains(xy) || !h.contains(yx)) {
          out.pass = false;
          out.witness = {{"e", e},
                         {"x", x},
                         {"y", y},
                         {"xy", xy},
                         {"yx", yx},
                         {"note", "fiber-by-H-class product escaped the H-class"}};
          return out;
        }
      }
    }
  }
  return out;
}

CheckResult check_power_successor(const CayleyTable& table) {
  CheckResult out{"power_successor"};
  for (Element x = 0; x < table.order(); ++x) {
    PowerProfile profile = power_profile(table, x);
    // Least n with x^n idempotent: the unique multiple of the period in
    // [index, index+period-1]; tail powers are never idempotent.
    int n = ((profile.index + profile.period - 1) / profile.period) * profile.period;
    Element e = profile.idempotent_power;
    Element next = x;
    for (int k = 2; k <= n + 1; ++k) {
      next = table.at(next, x);
    }
    if (!h_class(table, e).members.contains(next)) {
      out.pass = false;
      out.witness = {{"x", x},
                     {"n", n},
                     {"e", e},
                     {"x_pow_n_plus_1", next},
                     {"note", "successor power left the H-class of its idempotent"}};
      return out;
    }
  }
  return out;
}

CheckResult check_fiber_partition(const CayleyTable& table) {
  CheckResult out{"fiber_partition"};
  const ElementSet idems = idempotents(table);
  ElementSet covered(table.order());
  for (Element x = 0; x < table.order(); ++x) {
    ElementSet powers = element_powers(table, x);
    ElementSet reached = powers & idems;
    Element e = power_profile(table, x).idempotent_power;
    if (reached != ElementSet(table.order(), {e})) {
      out.pass = false;
      out.witness = {{"x", x},
                     {"idempotent_power", e},
                     {"idempotent_powers_reached", reached.to_string()},
                     {"note", "element powers into zero or several idempotents"}};
      return out;
    }
    covered.insert(x);
  }
  if (covered != table.all_elements()) {
    out.pass = false;
    out.witness = {{"covered", covered.to_string()}, {"note", "fibers fail to cover S"}};
  }
  return out;
}

CheckResult check_hclass_group(const CayleyTable& table) {
  CheckResult out{"hclass_group"};
  for (Element e : idempotents(table)) {
    if (auto v = group_hclass_violation(table, e)) {
      const char* kind = v->kind == GroupViolation::Kind::closure    ? "closure"
                         : v->kind == GroupViolation::Kind::identity ? "identity"
                                                                     : "inverse";
      out.pass = false;
      out.witness = {{"e", e}, {"kind", kind}, {"a", v->a}, {"b", v->b}, {"product", v->product}};
      return out;
    }
  }
  return out;
}

CheckResult check_finiteness_consistency(const CayleyTable& table) {
  CheckResult out{"finiteness_consistency"};
  const int n = table.order();
  const int chain = max_chain_size(table);
  const int antichain = max_antichain_size(table);
  if (chain < 1 || antichain < 1 || chain > n || antichain > n) {
    out.pass = false;
    out.witness = {{"order", n},
                   {"max_chain", chain},
                   {"max_antichain", antichain},
                   {"note", "maximum chain/antichain sizes out of the finite range"}};
  }
  return out;
}

namespace {

TableStats collect_stats(const CayleyTable& table) {
  TableStats stats;
  stats.max_chain = max_chain_size(table);
  stats.max_antichain = max_antichain_size(table);
  for (const auto& [e, members] : fiber_decomposition(table).fibers) {
    stats.fiber_sizes.push_back(members.size());
  }
  for (const auto& h : h_class_partition(table)) {
    stats.hclass_sizes.push_back(h.members.size());
  }
  stats.idempotent_count = idempotents(table).size();
  return stats;
}

}  // namespace

LemmaReport run_checks(const std::string& table_id, const CayleyTable& table) {
  LemmaReport report;
  report.table_id = table_id;
  report.checks = {
      check_hclass_antichain(table),
      check_fiber_absorption(table),
      check_power_successor(table),
      check_fiber_partition(table),
      check_hclass_group(table),
      check_finiteness_consistency(table),
  };
  report.stats = collect_stats(table);
  return report;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int parse_count(const std::string& text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    throw std::invalid_argument("expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

std::string pad(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) {
    s.insert(s.begin(), '0');
  }
  return s;
}

void add_enum_order(Corpus& corpus, int order) {
  int k = 0;
  enumerate_semigroups(order, Symmetry::iso_and_anti, [&](const CayleyTable& t) {
    corpus.tables.push_back({"enum" + std::to_string(order) + "/" + pad(k++, 3), t});
  });
}

void add_term(Corpus& corpus, const std::string& term) {
  if (term.find('/') != std::string::npos ||
      (term.size() > 4 && term.compare(term.size() - 4, 4, ".sgt") == 0)) {
    corpus.tables.push_back({term, load_sgt(term)});
    return;
  }
  auto parts = split(term, ':');
  const std::string& kind = parts[0];
  if (kind == "enum" && parts.size() == 2) {
    auto range = split(parts[1], '-');
    if (range.size() == 2) {
      int lo = parse_count(range[0]), hi = parse_count(range[1]);
      for (int n = lo; n <= hi; ++n) {
        add_enum_order(corpus, n);
      }
    } else {
      add_enum_order(corpus, parse_count(parts[1]));
    }
  } else if (kind == "stock" && parts.size() == 2) {
    int max = parse_count(parts[1]);
    const std::pair<StockFamily, const char*> families[] = {
        {StockFamily::left_zero, "left_zero"},
        {StockFamily::right_zero, "right_zero"},
        {StockFamily::zero, "zero"},
        {StockFamily::cyclic_group, "cyclic_group"},
    };
    for (const auto& [family, name] : families) {
      for (int n = 1; n <= max; ++n) {
        corpus.tables.push_back({std::string("stock/") + name + "/" + pad(n, 2),
                                 stock(family, n)});
      }
    }
  } else if (kind == "monogenic" && parts.size() == 2) {
    int max = parse_count(parts[1]);
    for (int index = 1; index < max; ++index) {
      for (int period = 1; index + period <= max; ++period) {
        corpus.tables.push_back({"monogenic/m" + std::to_string(index) + "_r" +
                                     std::to_string(period),
                                 monogenic(index, period)});
      }
    }
  } else if (kind == "example" && parts.size() == 2) {
    int max = parse_count(parts[1]);
    for (int level = 1; level <= max; ++level) {
      corpus.tables.push_back({"example/N" + pad(level, 2), level_truncation(level).table});
    }
  } else if (kind == "random" && parts.size() == 4) {
    int count = parse_count(parts[1]);
    int max_order = parse_count(parts[2]);
    std::uint64_t seed = std::stoull(parts[3]);
    for (int i = 0; i < count; ++i) {
      corpus.tables.push_back({"random/seed" + parts[3] + "/" + pad(i, 5),
                               random_semigroup(max_order, seed + i)});
    }
  } else {
    throw std::invalid_argument("unrecognized corpus term '" + term + "'");
  }
}

}  // namespace

Corpus build_corpus(const std::string& spec) {
  Corpus corpus;
  for (const std::string& term : split(spec, ',')) {
    if (term.empty()) {
      continue;
    }
    try {
      add_term(corpus, term);
    } catch (const std::exception& ex) {
      corpus.errors.push_back({term, ex.what()});
    }
  }
  return corpus;
}

long long SuiteResult::checks() const {
  long long total = 0;
  for (const auto& report : reports) {
    total += static_cast<long long>(report.checks.size());
  }
  return total;
}

long long SuiteResult::failures() const {
  long long total = 0;
  for (const auto& report : reports) {
    for (const auto& check : report.checks) {
      total += check.pass ? 0 : 1;
    }
  }
  return total;
}

SuiteResult run_suite(const Corpus& corpus, const SuiteOptions& options) {
  SuiteResult result;
  result.errors = corpus.errors;
  const int count = static_cast<int>(corpus.tables.size());
  result.reports.resize(count);

  if (options.jobs <= 1 || count <= 1 || options.fail_fast) {
    for (int i = 0; i < count; ++i) {
      result.reports[i] = run_checks(corpus.tables[i].id, corpus.tables[i].table);
      if (options.fail_fast && !result.reports[i].all_pass()) {
        result.reports.resize(i + 1);
        break;
      }
    }
    return result;
  }

  // Index-stable fan-out: worker w takes tables w, w+jobs, w+2*jobs, ...
  const int jobs = std::min(options.jobs, count);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      for (int i = w; i < count; i += jobs) {
        result.reports[i] = run_checks(corpus.tables[i].id, corpus.tables[i].table);
      }
    });
  }
  for (auto& worker : workers) {
    worker.join();
  }
  return result;
}

SuiteResult run_suite(const std::string& corpus_spec, const SuiteOptions& options) {
  return run_suite(build_corpus(corpus_spec), options);
}

nlohmann::json report_to_json(const LemmaReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& check : report.checks) {
    nlohmann::json entry = {{"check_name", check.check_name}, {"pass", check.pass}};
    if (!check.pass) {
      entry["witness"] = check.witness;
    }
    checks.push_back(std::move(entry));
  }
  return {{"table_id", report.table_id},
          {"checks", std::move(checks)},
          {"stats",
           {{"max_chain", report.stats.max_chain},
            {"max_antichain", report.stats.max_antichain},
            {"fiber_sizes", report.stats.fiber_sizes},
            {"hclass_sizes", report.stats.hclass_sizes},
            {"idempotent_count", report.stats.idempotent_count}}}};
}

nlohmann::json suite_to_json(const SuiteResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& report : result.reports) {
    reports.push_back(report_to_json(report));
  }
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& error : result.errors) {
    errors.push_back({{"entry", error.entry}, {"message", error.message}});
  }
  return {{"summary",
           {{"tables", result.tables()},
            {"checks", result.checks()},
            {"failures", result.failures()}}},
          {"reports", std::move(reports)},
          {"errors", std::move(errors)}};
}

}  // namespace semichain
