#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "semichain/families.hpp"
#include "semichain/sgt.hpp"
#include "semichain/verify.hpp"
#include "test_util.hpp"

using namespace semichain;
using testutil::make_table;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("semichain_test_" + name);
}

}  // namespace

TEST_CASE("invariant checks pass on healthy tables") {
  std::vector<CayleyTable> tables = {
      stock(StockFamily::zero, 5),
      stock(StockFamily::cyclic_group, 6),
      stock(StockFamily::left_zero, 4),
      monogenic(3, 4),
      level_truncation(4).table,
      make_table({{0, 0, 0}, {2, 1, 2}, {2, 2, 2}}),
  };
  for (const CayleyTable& t : tables) {
    for (const CheckResult& check :
         {check_hclass_antichain(t), check_fiber_absorption(t), check_power_successor(t),
          check_fiber_partition(t), check_hclass_group(t), check_finiteness_consistency(t)}) {
      CHECK(check.pass);
      CHECK(check.witness.empty());
      CHECK(!check.check_name.empty());
    }
  }
}

TEST_CASE("run_checks reports stats and all check names") {
  LemmaReport trunc = run_checks("trunc4", level_truncation(4).table);
  CHECK(trunc.table_id == "trunc4");
  CHECK(trunc.all_pass());
  REQUIRE(trunc.checks.size() == 6);
  std::vector<std::string> names;
  for (const CheckResult& c : trunc.checks) {
    names.push_back(c.check_name);
  }
  CHECK(names == std::vector<std::string>{"hclass_antichain", "fiber_absorption",
                                          "power_successor", "fiber_partition", "hclass_group",
                                          "finiteness_consistency"});
  CHECK(trunc.stats.max_chain == 4);
  CHECK(trunc.stats.max_antichain == 4);
  CHECK(trunc.stats.idempotent_count == 8);
  CHECK(trunc.stats.fiber_sizes == std::vector<int>(8, 1));
  CHECK(trunc.stats.hclass_sizes == std::vector<int>(8, 1));

  LemmaReport zero = run_checks("zero5", stock(StockFamily::zero, 5));
  CHECK(zero.all_pass());
  CHECK(zero.stats.max_chain == 1);
  CHECK(zero.stats.max_antichain == 4);
  CHECK(zero.stats.idempotent_count == 1);
  CHECK(zero.stats.fiber_sizes == std::vector<int>{5});
  CHECK(zero.stats.hclass_sizes == std::vector<int>(5, 1));

  LemmaReport mono = run_checks("m34", monogenic(3, 4));
  CHECK(mono.all_pass());
  CHECK(mono.stats.idempotent_count == 1);
  CHECK(mono.stats.fiber_sizes == std::vector<int>{6});
  CHECK(mono.stats.hclass_sizes == std::vector<int>{1, 1, 4});
}

TEST_CASE("corpus terms expand to the expected tables") {
  Corpus e3 = build_corpus("enum:3");
  CHECK(e3.errors.empty());
  REQUIRE(e3.tables.size() == 18);
  CHECK(e3.tables.front().id == "enum3/000");
  CHECK(e3.tables.back().id == "enum3/017");

  CHECK(build_corpus("enum:1-3").tables.size() == 1 + 4 + 18);

  Corpus stock12 = build_corpus("stock:12");
  CHECK(stock12.errors.empty());
  REQUIRE(stock12.tables.size() == 48);
  CHECK(stock12.tables.front().id == "stock/left_zero/01");
  CHECK(stock12.tables.back().id == "stock/cyclic_group/12");

  Corpus mono8 = build_corpus("monogenic:8");
  CHECK(mono8.tables.size() == 28);
  CHECK(mono8.tables.front().id == "monogenic/m1_r1");

  Corpus ex5 = build_corpus("example:5");
  REQUIRE(ex5.tables.size() == 5);
  CHECK(ex5.tables[0].id == "example/N01");
  CHECK(ex5.tables[4].id == "example/N05");
  CHECK(ex5.tables[3].table.order() == 8);

  Corpus rnd = build_corpus("random:10:6:42");
  CHECK(rnd.errors.empty());
  REQUIRE(rnd.tables.size() == 10);
  CHECK(rnd.tables.front().id == "random/seed42/00000");
  CHECK(rnd.tables.back().id == "random/seed42/00009");
  for (const CorpusEntry& entry : rnd.tables) {
    CHECK(entry.table.order() <= 6);
    CHECK(bool(validate_associativity(entry.table)));
  }
  Corpus rnd_again = build_corpus("random:10:6:42");
  for (std::size_t i = 0; i < rnd.tables.size(); ++i) {
    CHECK(rnd.tables[i].table == rnd_again.tables[i].table);
  }

  Corpus combined = build_corpus("example:2,stock:1");
  REQUIRE(combined.tables.size() == 6);
  CHECK(combined.tables[0].id == "example/N01");
  CHECK(combined.tables[2].id == "stock/left_zero/01");

  CHECK(build_corpus("").tables.empty());
  CHECK(build_corpus("").errors.empty());
  CHECK(build_corpus(",").tables.empty());
}

TEST_CASE("corpus file terms") {
  auto good = temp_file("good.sgt");
  save_sgt(stock(StockFamily::zero, 3), good.string());
  auto bad = temp_file("bad.sgt");
  {
    std::ofstream out(bad);
    out << "2\n0 9\n0 0\n";
  }

  Corpus corpus = build_corpus(good.string() + ",example:1," + bad.string() +
                               ",/nonexistent/missing.sgt");
  REQUIRE(corpus.tables.size() == 2);
  CHECK(corpus.tables[0].id == good.string());
  CHECK(corpus.tables[0].table == stock(StockFamily::zero, 3));
  CHECK(corpus.tables[1].id == "example/N01");
  REQUIRE(corpus.errors.size() == 2);
  CHECK(corpus.errors[0].entry == bad.string());
  CHECK(corpus.errors[0].message.find("out of range") != std::string::npos);
  CHECK(corpus.errors[1].entry == "/nonexistent/missing.sgt");
  CHECK(corpus.errors[1].message.find("cannot open") != std::string::npos);

  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST_CASE("corpus term errors are collected, not fatal") {
  Corpus corpus = build_corpus("stock:2,bogus:1,example:2");
  CHECK(corpus.tables.size() == 8 + 2);
  REQUIRE(corpus.errors.size() == 1);
  CHECK(corpus.errors[0].entry == "bogus:1");
  CHECK(corpus.errors[0].message.find("unrecognized corpus term") != std::string::npos);

  Corpus too_big = build_corpus("enum:9");
  CHECK(too_big.tables.empty());
  REQUIRE(too_big.errors.size() == 1);

  Corpus garbage = build_corpus("enum:abc");
  REQUIRE(garbage.errors.size() == 1);
  CHECK(garbage.errors[0].message.find("expected a non-negative integer") != std::string::npos);
}

TEST_CASE("suite over the truncation ladder") {
  SuiteResult result = run_suite("example:8");
  CHECK(result.errors.empty());
  REQUIRE(result.reports.size() == 8);
  CHECK(result.tables() == 8);
  CHECK(result.checks() == 48);
  CHECK(result.failures() == 0);
  const int expected_antichain[] = {1, 2, 2, 4, 4, 6, 6, 8};
  for (int i = 0; i < 8; ++i) {
    CHECK(result.reports[i].all_pass());
    CHECK(result.reports[i].stats.max_antichain == expected_antichain[i]);
    CHECK(result.reports[i].stats.max_chain == i + 1);
  }
}

TEST_CASE("suite results are independent of the job count") {
  const std::string spec = "enum:1-3,stock:6,monogenic:6,example:4,random:6:6:7";
  SuiteResult serial = run_suite(spec, {.fail_fast = false, .jobs = 1});
  SuiteResult parallel = run_suite(spec, {.fail_fast = false, .jobs = 4});
  REQUIRE(serial.reports.size() == parallel.reports.size());
  CHECK(serial.failures() == 0);
  CHECK(parallel.failures() == 0);
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    CHECK(serial.reports[i].table_id == parallel.reports[i].table_id);
    CHECK(serial.reports[i].stats.max_chain == parallel.reports[i].stats.max_chain);
    CHECK(serial.reports[i].stats.max_antichain == parallel.reports[i].stats.max_antichain);
    CHECK(serial.reports[i].stats.fiber_sizes == parallel.reports[i].stats.fiber_sizes);
  }

  SuiteResult eager = run_suite("example:3", {.fail_fast = true, .jobs = 1});
  CHECK(eager.reports.size() == 3);  // nothing fails, so nothing is cut short

  SuiteResult empty = run_suite("");
  CHECK(empty.reports.empty());
  CHECK(empty.errors.empty());

  SuiteResult broken = run_suite("bogus:1");
  CHECK(broken.reports.empty());
  CHECK(broken.errors.size() == 1);
}

TEST_CASE("json serialization") {
  nlohmann::json j = suite_to_json(run_suite("example:3,bogus:1"));
  CHECK(j["summary"]["tables"] == 3);
  CHECK(j["summary"]["checks"] == 18);
  CHECK(j["summary"]["failures"] == 0);
  REQUIRE(j["reports"].size() == 3);
  CHECK(j["reports"][0]["table_id"] == "example/N01");
  REQUIRE(j["reports"][0]["checks"].size() == 6);
  CHECK(j["reports"][0]["checks"][0]["check_name"] == "hclass_antichain");
  CHECK(j["reports"][0]["checks"][0]["pass"] == true);
  CHECK(!j["reports"][0]["checks"][0].contains("witness"));
  CHECK(j["reports"][2]["stats"]["max_antichain"] == 2);
  CHECK(j["reports"][2]["stats"].contains("fiber_sizes"));
  CHECK(j["reports"][2]["stats"].contains("hclass_sizes"));
  CHECK(j["reports"][2]["stats"].contains("idempotent_count"));
  REQUIRE(j["errors"].size() == 1);
  CHECK(j["errors"][0]["entry"] == "bogus:1");
  CHECK(j["errors"][0].contains("message"));

  // Failing checks carry their witness through serialization.
  LemmaReport fabricated;
  fabricated.table_id = "fake";
  fabricated.checks.push_back({"hclass_antichain", false, {{"x", 1}, {"y", 2}}});
  nlohmann::json fj = report_to_json(fabricated);
  CHECK(fj["checks"][0]["pass"] == false);
  CHECK(fj["checks"][0]["witness"]["x"] == 1);
  CHECK(!fabricated.all_pass());
}
