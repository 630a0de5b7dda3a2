#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "semichain/cayley_table.hpp"

namespace semichain {

// One invariant evaluated on one table. A failing check always carries a
// witness with the elements and products needed to replay it by hand.
struct CheckResult {
  std::string check_name;
  bool pass = true;
  nlohmann::json witness = nlohmann::json::object();
};

struct TableStats {
  int max_chain = 0;
  int max_antichain = 0;
  std::vector<int> fiber_sizes;   // by ascending idempotent
  std::vector<int> hclass_sizes;  // by ascending least representative
  int idempotent_count = 0;
};

struct LemmaReport {
  std::string table_id;
  std::vector<CheckResult> checks;
  TableStats stats;

  bool all_pass() const;
};

// The per-table invariants. All of them hold in every finite semigroup;
// a failure means an implementation bug (or would falsify the underlying
// algebra) and is reported with a replayable witness, never swallowed.
CheckResult check_hclass_antichain(const CayleyTable& table);      // H_e \ {e} is an antichain
CheckResult check_fiber_absorption(const CayleyTable& table);      // fiber(e)*H_e and H_e*fiber(e) stay in H_e
CheckResult check_power_successor(const CayleyTable& table);       // x^(n+1) in H_e when x^n = e minimally
CheckResult check_fiber_partition(const CayleyTable& table);       // fibers partition S, both readings agree
CheckResult check_hclass_group(const CayleyTable& table);          // H_e is a group at every idempotent
CheckResult check_finiteness_consistency(const CayleyTable& table);  // 1 <= max sizes <= |S|

// Runs every check plus the stats block.
LemmaReport run_checks(const std::string& table_id, const CayleyTable& table);

struct CorpusEntry {
  std::string id;
  CayleyTable table;
};

struct CorpusError {
  std::string entry;
  std::string message;
};

struct Corpus {
  std::vector<CorpusEntry> tables;
  std::vector<CorpusError> errors;
};

// Corpus spec: comma-separated terms.
//   enum:N       enumerated semigroups of order N (iso-and-anti classes)
//   enum:A-B     the same for every order in A..B
//   stock:N      left-zero, right-zero, zero and cyclic-group families, 1..N
//   monogenic:S  monogenic(index, period) for index+period <= S
//   example:N    layered-semilattice truncations, max level 1..N
//   random:C:N:SEED  C random semigroups of order <= N, seeds SEED, SEED+1, ...
//   anything containing '/' or ending in .sgt is loaded as a file
// Unreadable entries land in `errors` without aborting the rest.
Corpus build_corpus(const std::string& spec);

struct SuiteOptions {
  bool fail_fast = false;
  int jobs = 1;
};

struct SuiteResult {
  std::vector<LemmaReport> reports;
  std::vector<CorpusError> errors;

  int tables() const { return static_cast<int>(reports.size()); }
  long long checks() const;
  long long failures() const;
};

SuiteResult run_suite(const std::string& corpus_spec, const SuiteOptions& options = {});
SuiteResult run_suite(const Corpus& corpus, const SuiteOptions& options = {});

nlohmann::json report_to_json(const LemmaReport& report);
nlohmann::json suite_to_json(const SuiteResult& result);

}  // namespace semichain
