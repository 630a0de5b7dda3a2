#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "semichain/cayley_table.hpp"

namespace semichain {

// Witness that a subset fails the chain (or antichain) condition: the
// ordered pair (x, y) whose product xy breaks it.
struct PairViolation {
  Element x;
  Element y;
  Element xy;
};

// A chain contains xy in {x, y} for ALL ordered pairs, including x = y —
// so every chain member is idempotent. An antichain keeps xy outside
// {x, y} for all ordered pairs of distinct members.
std::optional<PairViolation> chain_violation(const CayleyTable& table, const ElementSet& a);
std::optional<PairViolation> antichain_violation(const CayleyTable& table, const ElementSet& a);
bool is_chain(const CayleyTable& table, const ElementSet& a);
bool is_antichain(const CayleyTable& table, const ElementSet& a);

// Compatibility graph whose cliques are exactly the chains (antichains) of
// size >= 2; listed vertices alone give the singletons. Chain mode keeps
// only idempotent vertices.
struct CompatGraph {
  enum class Mode { chain, antichain, generic };

  Mode mode = Mode::generic;
  int element_universe = 0;       // order of the originating table
  std::vector<Element> vertices;  // graph vertex -> element
  std::vector<std::uint64_t> adj; // symmetric bit rows over vertex indices

  static CompatGraph generic(int vertex_count);

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool adjacent(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v);
  int degree(int u) const;
  // Pairs u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;
};

CompatGraph chain_graph(const CayleyTable& table);
CompatGraph antichain_graph(const CayleyTable& table);

struct MaxCliqueOptions {
  long long node_budget = 50'000'000;
};

struct CliqueResult {
  ElementSet members;           // elements of the clique
  std::vector<int> vertex_ids;  // graph-space vertex indices, ascending
  long long nodes = 0;          // search nodes expanded
};

// The exact search never falls back to a heuristic: exhausting the node
// budget raises this, carrying the best clique found so far.
class CliqueBudgetError : public std::runtime_error {
 public:
  CliqueBudgetError(CliqueResult best, long long budget)
      : std::runtime_error("max_clique node budget of " + std::to_string(budget) +
                           " exhausted; best clique so far has size " +
                           std::to_string(best.members.size())),
        best(std::move(best)) {}

  CliqueResult best;
};

// Exact maximum clique by branch-and-bound with a greedy colouring bound.
// Deterministic: vertices are branched in descending-degree order (ties by
// index) and the first maximum clique found in that DFS order is returned,
// i.e. the lexicographically least one under the branch order.
CliqueResult max_clique(const CompatGraph& graph, const MaxCliqueOptions& options = {});

CliqueResult max_chain_clique(const CayleyTable& table, const MaxCliqueOptions& options = {});
CliqueResult max_antichain_clique(const CayleyTable& table, const MaxCliqueOptions& options = {});
int max_chain_size(const CayleyTable& table, const MaxCliqueOptions& options = {});
int max_antichain_size(const CayleyTable& table, const MaxCliqueOptions& options = {});

// Commutative with every element idempotent.
bool is_semilattice(const CayleyTable& table);

// Minimum family of chains covering a semilattice, via the Dilworth
// correspondence: bipartite matching on the strict pairs of the natural
// order x <= y iff xy = x. Cover size equals the maximum antichain size.
// Throws std::invalid_argument when the table is not a semilattice.
std::vector<ElementSet> min_chain_cover(const CayleyTable& table);

}  // namespace semichain
