#include <doctest.h>

#include <random>
#include <string>

#include "semichain/cayley_table.hpp"
#include "semichain/families.hpp"
#include "semichain/sgt.hpp"
#include "test_util.hpp"

using namespace semichain;
using testutil::make_table;

namespace {

// Reference scan: lexicographically least failing triple, no shortcuts.
AssocCheck brute_least_counterexample(const CayleyTable& t) {
  const int n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z))) {
          AssocCheck c;
          c.status = AssocCheck::Status::counterexample;
          c.x = x;
          c.y = y;
          c.z = z;
          return c;
        }
      }
    }
  }
  return {};
}

SgtParseError capture_parse_error(const std::string& text) {
  try {
    parse_sgt(text);
  } catch (const SgtParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return SgtParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("table construction validates shape") {
  CHECK_THROWS_AS(CayleyTable(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(65, std::vector<Element>(65 * 65, 0)), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(2, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(2, {0, 0, 1, 1}, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(2, {0, 0, 1, 1}, {"a", "a"}), std::invalid_argument);
  CHECK_NOTHROW(CayleyTable(2, {0, 0, 1, 1}, {"a", "b"}));
}

TEST_CASE("associativity verdicts on fixed tables") {
  CHECK(bool(validate_associativity(make_table({{0}}))));
  CHECK(bool(validate_associativity(make_table({{0, 0}, {1, 1}}))));

  // 0*0=1 makes (0*0)*1 = 0 but 0*(0*1) = 1.
  AssocCheck bad = validate_associativity(make_table({{1, 0}, {0, 0}}));
  REQUIRE(bad.status == AssocCheck::Status::counterexample);
  CHECK(bad.x == 0);
  CHECK(bad.y == 0);
  CHECK(bad.z == 1);

  AssocCheck malformed = validate_associativity(CayleyTable(2, {0, 5, 0, 1}));
  REQUIRE(malformed.status == AssocCheck::Status::malformed);
  CHECK(malformed.row == 0);
  CHECK(malformed.col == 1);
}

TEST_CASE("counterexamples are the least triple on random tables") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Element> products(static_cast<std::size_t>(n) * n);
    for (auto& p : products) {
      p = static_cast<Element>(rng() % n);
    }
    CayleyTable t(n, products);
    AssocCheck got = validate_associativity(t);
    AssocCheck want = brute_least_counterexample(t);
    CHECK(got.status == want.status);
    CHECK(got.x == want.x);
    CHECK(got.y == want.y);
    CHECK(got.z == want.z);
  }
}

TEST_CASE("generator-driven path agrees beyond the full-scan cutoff") {
  CHECK(bool(validate_associativity(stock(StockFamily::cyclic_group, 20))));
  CHECK(bool(validate_associativity(stock(StockFamily::left_zero, 17))));
  CHECK(bool(validate_associativity(stock(StockFamily::zero, 30))));

  // One corrupted cell in a large cyclic group must still surface the least
  // failing triple, not just a boolean.
  CayleyTable base = stock(StockFamily::cyclic_group, 20);
  std::vector<Element> products = base.products();
  products[static_cast<std::size_t>(3) * 20 + 4] = (3 + 4 + 1) % 20;
  CayleyTable corrupted(20, products);
  AssocCheck got = validate_associativity(corrupted);
  AssocCheck want = brute_least_counterexample(corrupted);
  REQUIRE(got.status == AssocCheck::Status::counterexample);
  CHECK(got.x == want.x);
  CHECK(got.y == want.y);
  CHECK(got.z == want.z);
}

TEST_CASE("identity detection") {
  CHECK(has_identity(stock(StockFamily::cyclic_group, 3)) == 0);
  CHECK(!has_identity(stock(StockFamily::left_zero, 2)));
  CHECK(has_identity(make_table({{0}})) == 0);
  CHECK(!has_identity(stock(StockFamily::zero, 3)));
}

TEST_CASE("identity adjunction") {
  CayleyTable left_zero = stock(StockFamily::left_zero, 2);
  CayleyTable extended = adjoin_identity(left_zero);
  REQUIRE(extended.order() == 3);
  CHECK(has_identity(extended) == 2);
  for (Element x = 0; x < 3; ++x) {
    CHECK(extended.at(2, x) == x);
    CHECK(extended.at(x, 2) == x);
  }
  for (Element x = 0; x < 2; ++x) {
    for (Element y = 0; y < 2; ++y) {
      CHECK(extended.at(x, y) == left_zero.at(x, y));
    }
  }
  CHECK(bool(validate_associativity(extended)));

  CayleyTable group = stock(StockFamily::cyclic_group, 3);
  CHECK(adjoin_identity(group) == group);

  CayleyTable zero2 = adjoin_identity(stock(StockFamily::zero, 2));
  CHECK(zero2.order() == 3);
  CHECK(bool(validate_associativity(zero2)));

  // Adjoining is idempotent as a table transformation.
  CHECK(adjoin_identity(extended) == extended);
  CHECK(adjoin_identity(zero2) == zero2);

  // A fresh label is chosen even when "1" is taken.
  CayleyTable labeled = make_table({{0, 0}, {1, 1}}, {"1", "x"});
  CayleyTable labeled_ext = adjoin_identity(labeled);
  REQUIRE(labeled_ext.labels().size() == 3);
  CHECK(labeled_ext.labels()[2] == "1'");
}

TEST_CASE("translations") {
  CayleyTable zero3 = stock(StockFamily::zero, 3);
  CHECK(left_translate(zero3, 1, ElementSet(3, {1, 2})) == ElementSet(3, {0}));

  CayleyTable lz = stock(StockFamily::left_zero, 3);
  CHECK(left_translate(lz, 2, ElementSet::full(3)) == ElementSet(3, {2}));
  CHECK(right_translate(lz, 2, ElementSet::full(3)) == ElementSet::full(3));

  // x idempotent, A = {x}.
  CHECK(left_translate(zero3, 0, ElementSet(3, {0})) == ElementSet(3, {0}));

  // Distributes over union.
  std::mt19937_64 rng(11);
  CayleyTable t = stock(StockFamily::cyclic_group, 6);
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet a = ElementSet::from_bits(6, rng() % 64);
    ElementSet b = ElementSet::from_bits(6, rng() % 64);
    Element x = static_cast<Element>(rng() % 6);
    CHECK(left_translate(t, x, a | b) == (left_translate(t, x, a) | left_translate(t, x, b)));
    CHECK(right_translate(t, x, a | b) == (right_translate(t, x, a) | right_translate(t, x, b)));
  }
}

TEST_CASE("sgt emit golden forms") {
  CHECK(emit_sgt(stock(StockFamily::zero, 2)) == "2\n0 0\n0 0\n");
  CHECK(emit_sgt(level_truncation(2).table) ==
        "3\n0 0 0\n0 1 0\n0 0 2\nlabels: 1.0 2.1 2.2\n");
}

TEST_CASE("sgt parsing accepts comments and blank lines") {
  CayleyTable t = parse_sgt("# header\n\n2\n# interior\n0 0\n\n1 1\n");
  CHECK(t.order() == 2);
  CHECK(t.at(1, 0) == 1);
  CHECK(!t.has_labels());
}

TEST_CASE("sgt round trip is a fixpoint") {
  std::vector<CayleyTable> tables;
  for (int n = 1; n <= 6; ++n) {
    tables.push_back(stock(StockFamily::left_zero, n));
    tables.push_back(stock(StockFamily::right_zero, n));
    tables.push_back(stock(StockFamily::zero, n));
    tables.push_back(stock(StockFamily::cyclic_group, n));
  }
  for (int level = 1; level <= 6; ++level) {
    tables.push_back(level_truncation(level).table);
  }
  tables.push_back(monogenic(3, 4));
  for (const CayleyTable& t : tables) {
    CayleyTable once = parse_sgt(emit_sgt(t));
    CayleyTable twice = parse_sgt(emit_sgt(once));
    CHECK(once == t);
    CHECK(twice == once);
    CHECK(once.labels() == t.labels());
    CHECK(twice.labels() == once.labels());
  }
}

TEST_CASE("sgt diagnostics carry line and column") {
  SgtParseError empty = capture_parse_error("");
  CHECK(empty.line == 1);
  CHECK(empty.column == 1);

  SgtParseError head = capture_parse_error("2 3\n0 0\n1 1\n");
  CHECK(head.line == 1);
  CHECK(head.column == 3);

  CHECK_THROWS_AS(parse_sgt("0\n"), SgtParseError);
  CHECK_THROWS_AS(parse_sgt("65\n"), SgtParseError);
  CHECK_THROWS_AS(parse_sgt("x\n"), SgtParseError);

  SgtParseError missing = capture_parse_error("2\n0 0\n");
  CHECK(missing.line == 2);
  CHECK(std::string(missing.what()).find("expected 2 table rows") != std::string::npos);

  SgtParseError arity = capture_parse_error("2\n0 0 0\n0 0\n");
  CHECK(arity.line == 2);
  CHECK(arity.column == 5);

  SgtParseError range = capture_parse_error("2\n0 9\n0 0\n");
  CHECK(range.line == 2);
  CHECK(range.column == 3);
  CHECK(std::string(range.what()).find("entry 9 out of range") != std::string::npos);

  SgtParseError entry = capture_parse_error("2\n0 q\n0 0\n");
  CHECK(entry.line == 2);
  CHECK(entry.column == 3);

  CHECK_THROWS_AS(parse_sgt("1\n0\nlabels: a b\n"), SgtParseError);
  SgtParseError dup = capture_parse_error("2\n0 0\n0 0\nlabels: a a\n");
  CHECK(dup.line == 4);
  CHECK(std::string(dup.what()).find("duplicate label") != std::string::npos);

  SgtParseError trailing = capture_parse_error("1\n0\n0\n");
  CHECK(trailing.line == 3);
  SgtParseError after_labels = capture_parse_error("1\n0\nlabels: a\n0\n");
  CHECK(after_labels.line == 4);
}

TEST_CASE("associativity verdict is stable under redundant sampling") {
  std::mt19937_64 rng(23);
  for (const CayleyTable& t : {stock(StockFamily::cyclic_group, 12), monogenic(4, 3)}) {
    REQUIRE(bool(validate_associativity(t)));
    for (int trial = 0; trial < 1000; ++trial) {
      Element x = static_cast<Element>(rng() % t.order());
      Element y = static_cast<Element>(rng() % t.order());
      Element z = static_cast<Element>(rng() % t.order());
      CHECK(t.at(t.at(x, y), z) == t.at(x, t.at(y, z)));
    }
  }
}
