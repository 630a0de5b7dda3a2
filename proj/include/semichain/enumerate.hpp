#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "semichain/cayley_table.hpp"

namespace semichain {

enum class Symmetry {
  iso,           // quotient by element relabelings
  iso_and_anti,  // additionally by table transposition
};

// The lexicographically least flat table over the relabeling orbit (and the
// transpose orbit under iso_and_anti).
struct CanonicalForm {
  int order;
  std::vector<Element> flat;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

// Full-orbit minimization; capped at order 8 where the orbit is still tiny.
CanonicalForm canonical_form(const CayleyTable& table, Symmetry symmetry);

bool is_canonical(const CayleyTable& table, Symmetry symmetry);

// Stable 64-bit digest of a canonical form, used to name emitted files.
std::uint64_t canonical_digest(const CanonicalForm& form);

// Yields exactly one representative per equivalence class of associative
// tables of the given order, in backtracking order. Cell-by-cell search
// with incremental associativity rejection, filtered to self-canonical
// tables. Supported orders: 1..4.
void enumerate_semigroups(int order, Symmetry symmetry,
                          const std::function<void(const CayleyTable&)>& yield);
std::vector<CayleyTable> enumerate_semigroups(int order, Symmetry symmetry);

// A valid semigroup sampled as the closure of random transformations of a
// small set under composition, relabeled in discovery order; rejects and
// resamples while the closure exceeds max_order. Deterministic per seed.
// Throws std::runtime_error when the attempt budget runs out.
CayleyTable random_semigroup(int max_order, std::uint64_t seed);

}  // namespace semichain
