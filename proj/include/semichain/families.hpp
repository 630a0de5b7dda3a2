#pragma once

#include <string>
#include <vector>

#include "semichain/cayley_table.hpp"

namespace semichain {

// A point of the layered semilattice: odd levels carry the single slot 0,
// even level 2n carries slots 1..2n.
struct LevelElement {
  int level;
  int slot;

  bool operator==(const LevelElement&) const = default;
  std::string to_string() const { return std::to_string(level) + "." + std::to_string(slot); }
};

bool valid_level_element(const LevelElement& a);

// Meet of the layered semilattice: equal points are fixed, same-level
// distinct points drop to the single point one level below, otherwise the
// lower-level point wins. Throws std::invalid_argument on invalid points.
LevelElement level_meet(const LevelElement& a, const LevelElement& b);

// Retraction onto the odd-level chain: odd levels are fixed, even levels
// map to the single point one level below.
LevelElement level_retract(const LevelElement& a);

// The finite sub-semilattice of all points with level <= max_level,
// ordered by (level, slot); closed since a meet never exceeds the larger
// input level. Labels follow LevelElement::to_string ("4.2").
struct LevelTruncation {
  CayleyTable table;
  std::vector<LevelElement> elements;  // index-aligned with the table
  int max_level;

  // -1 when the point lies outside the truncation.
  int index_of(const LevelElement& a) const;
};

LevelTruncation level_truncation(int max_level);

// The semigroup generated by one element with the given index and period:
// symbols x^1..x^(index+period-1), exponents folded into the final cycle.
CayleyTable monogenic(int index, int period);

enum class StockFamily { left_zero, right_zero, zero, cyclic_group };

// xy = x | xy = y | xy = 0 | addition mod n.
CayleyTable stock(StockFamily family, int n);

}  // namespace semichain
