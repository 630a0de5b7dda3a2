#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semichain/cayley_table.hpp"

namespace semichain {

// Index m, period r and the idempotent power of the monogenic subsemigroup
// generated by an element: x^(m+r) = x^m with m, r minimal, and the unique
// idempotent among the powers is x^k for the single multiple k of r in
// [m, m+r-1].
struct PowerProfile {
  Element element;
  int index;
  int period;
  Element idempotent_power;
};

PowerProfile power_profile(const CayleyTable& table, Element x);

// {x^k : k >= 1} — the tail plus the cycle of the power sequence.
ElementSet element_powers(const CayleyTable& table, Element x);

// E(S) = {x : xx = x}. Nonempty for every finite semigroup.
ElementSet idempotents(const CayleyTable& table);

// Fibers over the idempotents: x belongs to the fiber of its idempotent
// power. Both characterizations (keyed by idempotent_power, and "some power
// of x equals e") are verified to coincide; a mismatch throws.
struct FiberDecomposition {
  // Sorted by idempotent.
  std::vector<std::pair<Element, ElementSet>> fibers;

  const ElementSet* find(Element e) const;
};

FiberDecomposition fiber_decomposition(const CayleyTable& table);

// xS^1 = {x} ∪ xS and S^1x = {x} ∪ Sx as subsets of S.
ElementSet principal_right_ideal(const CayleyTable& table, Element x);
ElementSet principal_left_ideal(const CayleyTable& table, Element x);

struct HClass {
  Element representative;
  ElementSet members;
  ElementSet right_ideal;  // xS^1
  ElementSet left_ideal;   // S^1x
};

// H_x = {y : yS^1 = xS^1 and S^1y = S^1x}.
HClass h_class(const CayleyTable& table, Element x);

// The distinct H-classes, ordered by least representative.
std::vector<HClass> h_class_partition(const CayleyTable& table);

// Evidence that H_e fails to be a group under the table operation with
// identity e. Green's theory says this never happens at an idempotent; the
// checker exists to verify exactly that.
struct GroupViolation {
  enum class Kind { closure, identity, inverse };
  Kind kind;
  Element a = -1;
  Element b = -1;        // second operand for closure violations
  Element product = -1;  // offending product (closure/identity)
};

// Throws std::invalid_argument unless e is idempotent.
std::optional<GroupViolation> group_hclass_violation(const CayleyTable& table, Element e);
bool is_group_hclass(const CayleyTable& table, Element e);

}  // namespace semichain
