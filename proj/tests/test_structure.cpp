#include <doctest.h>

#include <vector>

#include "semichain/enumerate.hpp"
#include "semichain/families.hpp"
#include "semichain/structure.hpp"
#include "test_util.hpp"

using namespace semichain;
using testutil::make_table;

namespace {

std::vector<CayleyTable> structure_corpus() {
  std::vector<CayleyTable> tables;
  for (int n = 1; n <= 3; ++n) {
    for (const CayleyTable& t : enumerate_semigroups(n, Symmetry::iso)) {
      tables.push_back(t);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    tables.push_back(stock(StockFamily::left_zero, n));
    tables.push_back(stock(StockFamily::right_zero, n));
    tables.push_back(stock(StockFamily::zero, n));
    tables.push_back(stock(StockFamily::cyclic_group, n));
  }
  tables.push_back(monogenic(1, 1));
  tables.push_back(monogenic(3, 4));
  tables.push_back(monogenic(5, 2));
  for (int level = 1; level <= 5; ++level) {
    tables.push_back(level_truncation(level).table);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    tables.push_back(random_semigroup(10, seed));
  }
  return tables;
}

}  // namespace

TEST_CASE("idempotents on fixed tables") {
  CHECK(idempotents(stock(StockFamily::zero, 3)) == ElementSet(3, {0}));
  CHECK(idempotents(stock(StockFamily::left_zero, 4)) == ElementSet::full(4));
  CHECK(idempotents(stock(StockFamily::cyclic_group, 5)) == ElementSet(5, {0}));
  CHECK(idempotents(monogenic(3, 4)) == ElementSet(6, {3}));
  CHECK(idempotents(level_truncation(2).table) == ElementSet::full(3));
}

TEST_CASE("power profiles on fixed tables") {
  PowerProfile generator = power_profile(monogenic(3, 4), 0);
  CHECK(generator.index == 3);
  CHECK(generator.period == 4);
  CHECK(generator.idempotent_power == 3);

  PowerProfile identity = power_profile(stock(StockFamily::cyclic_group, 5), 0);
  CHECK(identity.index == 1);
  CHECK(identity.period == 1);
  CHECK(identity.idempotent_power == 0);

  PowerProfile rotation = power_profile(stock(StockFamily::cyclic_group, 6), 1);
  CHECK(rotation.index == 1);
  CHECK(rotation.period == 6);
  CHECK(rotation.idempotent_power == 0);

  PowerProfile nilpotent = power_profile(stock(StockFamily::zero, 3), 1);
  CHECK(nilpotent.index == 2);
  CHECK(nilpotent.period == 1);
  CHECK(nilpotent.idempotent_power == 0);
}

TEST_CASE("element powers on fixed tables") {
  CHECK(element_powers(monogenic(3, 4), 0) == ElementSet::full(6));
  CHECK(element_powers(stock(StockFamily::cyclic_group, 4), 2) == ElementSet(4, {0, 2}));
  CHECK(element_powers(stock(StockFamily::zero, 3), 2) == ElementSet(3, {0, 2}));
  CHECK(element_powers(stock(StockFamily::left_zero, 3), 1) == ElementSet(3, {1}));
}

TEST_CASE("power profile invariants across the corpus") {
  for (const CayleyTable& t : structure_corpus()) {
    for (Element x = 0; x < t.order(); ++x) {
      PowerProfile p = power_profile(t, x);
      REQUIRE(p.element == x);
      REQUIRE(p.index >= 1);
      REQUIRE(p.period >= 1);

      // Walk the power sequence far enough to compare x^k positions.
      std::vector<Element> powers;  // powers[k-1] = x^k
      Element cur = x;
      powers.push_back(cur);
      for (int k = 2; k <= 2 * (p.index + p.period) + 2; ++k) {
        cur = t.at(cur, x);
        powers.push_back(cur);
      }

      // x^(m+r) = x^m with both parameters minimal.
      CHECK(powers[p.index + p.period - 1] == powers[p.index - 1]);
      if (p.index > 1) {
        CHECK(powers[p.index + p.period - 2] != powers[p.index - 2]);
      }
      for (int r = 1; r < p.period; ++r) {
        CHECK(powers[p.index + r - 1] != powers[p.index - 1]);
      }

      // The idempotent power is x^k for the unique multiple k of r in
      // [m, m+r-1], and it is idempotent.
      int k = p.period * ((p.index + p.period - 1) / p.period);
      REQUIRE(k >= p.index);
      REQUIRE(k <= p.index + p.period - 1);
      CHECK(p.idempotent_power == powers[k - 1]);
      CHECK(t.at(p.idempotent_power, p.idempotent_power) == p.idempotent_power);

      // element_powers is exactly the tail plus the cycle.
      ElementSet expect(t.order());
      for (int i = 0; i < p.index + p.period - 1; ++i) {
        expect.insert(powers[i]);
      }
      CHECK(element_powers(t, x) == expect);
      CHECK(element_powers(t, x).size() == p.index + p.period - 1);
    }
  }
}

TEST_CASE("fiber decomposition on fixed tables") {
  FiberDecomposition zero_fibers = fiber_decomposition(stock(StockFamily::zero, 3));
  REQUIRE(zero_fibers.fibers.size() == 1);
  CHECK(zero_fibers.fibers[0].first == 0);
  CHECK(zero_fibers.fibers[0].second == ElementSet::full(3));

  FiberDecomposition lz_fibers = fiber_decomposition(stock(StockFamily::left_zero, 3));
  REQUIRE(lz_fibers.fibers.size() == 3);
  for (Element e = 0; e < 3; ++e) {
    CHECK(lz_fibers.fibers[e].first == e);
    CHECK(lz_fibers.fibers[e].second == ElementSet(3, {e}));
  }

  FiberDecomposition mono_fibers = fiber_decomposition(monogenic(3, 4));
  REQUIRE(mono_fibers.fibers.size() == 1);
  CHECK(mono_fibers.fibers[0].first == 3);
  CHECK(mono_fibers.fibers[0].second == ElementSet::full(6));

  REQUIRE(zero_fibers.find(0) != nullptr);
  CHECK(*zero_fibers.find(0) == ElementSet::full(3));
  CHECK(zero_fibers.find(1) == nullptr);
}

TEST_CASE("fibers partition the semigroup and match the power reading") {
  for (const CayleyTable& t : structure_corpus()) {
    FiberDecomposition fibers = fiber_decomposition(t);
    ElementSet seen(t.order());
    ElementSet idem = idempotents(t);
    for (const auto& [e, members] : fibers.fibers) {
      CHECK(idem.contains(e));
      CHECK(members.contains(e));
      CHECK(!members.intersects(seen));
      seen |= members;
    }
    CHECK(seen == ElementSet::full(t.order()));
    CHECK(static_cast<int>(fibers.fibers.size()) == idem.size());

    // Existential reading: x lies over e exactly when some power of x is e.
    for (Element x = 0; x < t.order(); ++x) {
      ElementSet powers = element_powers(t, x);
      for (const auto& [e, members] : fibers.fibers) {
        CHECK(members.contains(x) == powers.contains(e));
      }
    }
  }
}

TEST_CASE("principal ideals on fixed tables") {
  CayleyTable zero3 = stock(StockFamily::zero, 3);
  CHECK(principal_right_ideal(zero3, 1) == ElementSet(3, {0, 1}));
  CHECK(principal_left_ideal(zero3, 1) == ElementSet(3, {0, 1}));

  CayleyTable lz3 = stock(StockFamily::left_zero, 3);
  CHECK(principal_right_ideal(lz3, 1) == ElementSet(3, {1}));
  CHECK(principal_left_ideal(lz3, 1) == ElementSet::full(3));

  CayleyTable group = stock(StockFamily::cyclic_group, 4);
  for (Element x = 0; x < 4; ++x) {
    CHECK(principal_right_ideal(group, x) == ElementSet::full(4));
    CHECK(principal_left_ideal(group, x) == ElementSet::full(4));
  }
}

TEST_CASE("H-classes on fixed tables") {
  HClass group_class = h_class(stock(StockFamily::cyclic_group, 4), 2);
  CHECK(group_class.representative == 2);
  CHECK(group_class.members == ElementSet::full(4));

  HClass lz_class = h_class(stock(StockFamily::left_zero, 3), 1);
  CHECK(lz_class.members == ElementSet(3, {1}));

  // Cycle part of a monogenic semigroup is the group H-class of its
  // idempotent; tail powers sit in singleton classes.
  CayleyTable mono = monogenic(3, 4);
  CHECK(h_class(mono, 3).members == ElementSet(6, {2, 3, 4, 5}));
  CHECK(h_class(mono, 0).members == ElementSet(6, {0}));

  std::vector<HClass> zero_classes = h_class_partition(stock(StockFamily::zero, 3));
  REQUIRE(zero_classes.size() == 3);
  for (Element x = 0; x < 3; ++x) {
    CHECK(zero_classes[x].representative == x);
    CHECK(zero_classes[x].members == ElementSet(3, {x}));
  }
}

TEST_CASE("H-class partition invariants across the corpus") {
  for (const CayleyTable& t : structure_corpus()) {
    std::vector<HClass> classes = h_class_partition(t);
    ElementSet seen(t.order());
    Element prev_rep = -1;
    for (const HClass& c : classes) {
      CHECK(c.representative > prev_rep);
      prev_rep = c.representative;
      CHECK(c.members.min() == c.representative);
      CHECK(!c.members.intersects(seen));
      seen |= c.members;
      CHECK(c.right_ideal == principal_right_ideal(t, c.representative));
      CHECK(c.left_ideal == principal_left_ideal(t, c.representative));
      for (Element y : c.members) {
        CHECK(principal_right_ideal(t, y) == c.right_ideal);
        CHECK(principal_left_ideal(t, y) == c.left_ideal);
        CHECK(h_class(t, y).members == c.members);
      }
    }
    CHECK(seen == ElementSet::full(t.order()));
  }
}

TEST_CASE("H-classes of idempotents are groups") {
  for (const CayleyTable& t : structure_corpus()) {
    for (Element e : idempotents(t)) {
      CHECK(is_group_hclass(t, e));
      CHECK(!group_hclass_violation(t, e).has_value());
    }
  }

  CHECK_THROWS_AS(group_hclass_violation(monogenic(3, 4), 0), std::invalid_argument);
  CHECK_THROWS_AS(is_group_hclass(stock(StockFamily::zero, 3), 1), std::invalid_argument);
}

TEST_CASE("group H-class structure in a cyclic group") {
  CayleyTable group = stock(StockFamily::cyclic_group, 6);
  CHECK(is_group_hclass(group, 0));
  // Every element of the class has an inverse against the idempotent.
  for (Element a = 0; a < 6; ++a) {
    bool found = false;
    for (Element b = 0; b < 6 && !found; ++b) {
      found = group.at(a, b) == 0 && group.at(b, a) == 0;
    }
    CHECK(found);
  }
}
