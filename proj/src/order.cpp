#include "semichain/order.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "semichain/structure.hpp"

namespace semichain {

std::optional<PairViolation> chain_violation(const CayleyTable& table, const ElementSet& a) {
  for (Element x : a) {
    for (Element y : a) {
      Element p = table.at(x, y);
      if (p != x && p != y) {
        return PairViolation{x, y, p};
      }
    }
  }
  return std::nullopt;
}

std::optional<PairViolation> antichain_violation(const CayleyTable& table, const ElementSet& a) {
  for (Element x : a) {
    for (Element y : a) {
      if (x == y) {
        continue;
      }
      Element p = table.at(x, y);
      if (p == x || p == y) {
        return PairViolation{x, y, p};
      }
    }
  }
  return std::nullopt;
}

bool is_chain(const CayleyTable& table, const ElementSet& a) {
  return !chain_violation(table, a).has_value();
}

bool is_antichain(const CayleyTable& table, const ElementSet& a) {
  return !antichain_violation(table, a).has_value();
}

CompatGraph CompatGraph::generic(int vertex_count) {
  CompatGraph g;
  g.mode = Mode::generic;
  g.element_universe = vertex_count;
  g.vertices.resize(vertex_count);
  std::iota(g.vertices.begin(), g.vertices.end(), 0);
  g.adj.assign(vertex_count, 0);
  return g;
}

void CompatGraph::add_edge(int u, int v) {
  if (u == v) {
    throw std::invalid_argument("self-loops are not allowed");
  }
  adj[u] |= std::uint64_t{1} << v;
  adj[v] |= std::uint64_t{1} << u;
}

int CompatGraph::degree(int u) const { return std::popcount(adj[u]); }

std::vector<std::pair<int, int>> CompatGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v = u + 1; v < vertex_count(); ++v) {
      if (adjacent(u, v)) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

CompatGraph chain_graph(const CayleyTable& table) {
  CompatGraph g;
  g.mode = CompatGraph::Mode::chain;
  g.element_universe = table.order();
  for (Element e : idempotents(table)) {
    g.vertices.push_back(e);
  }
  const int v = g.vertex_count();
  g.adj.assign(v, 0);
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      Element x = g.vertices[i], y = g.vertices[j];
      Element xy = table.at(x, y), yx = table.at(y, x);
      if ((xy == x || xy == y) && (yx == x || yx == y)) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

CompatGraph antichain_graph(const CayleyTable& table) {
  const int n = table.order();
  CompatGraph g = CompatGraph::generic(n);
  g.mode = CompatGraph::Mode::antichain;
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      Element xy = table.at(x, y), yx = table.at(y, x);
      if (xy != x && xy != y && yx != x && yx != y) {
        g.add_edge(x, y);
      }
    }
  }
  return g;
}

namespace {

struct BudgetHit {};

// Branch-and-bound state over vertices reordered by descending degree.
struct CliqueSearch {
  int n;
  std::vector<std::uint64_t> adj;  // in search order
  std::vector<int> order;          // search index -> original vertex
  long long budget;
  long long nodes = 0;
  std::uint64_t best = 0;
  int best_size = 0;

  // Greedy sequential colouring of the candidate set; the colour count
  // bounds any clique inside it.
  int colour_bound(std::uint64_t cand) const {
    int colours = 0;
    while (cand) {
      std::uint64_t cls = cand;
      while (cls) {
        int v = std::countr_zero(cls);
        cand &= ~(std::uint64_t{1} << v);
        cls &= ~adj[v];
        cls &= ~(std::uint64_t{1} << v);
      }
      ++colours;
    }
    return colours;
  }

  void expand(std::uint64_t clique, int size, std::uint64_t cand) {
    ++nodes;
    if (nodes > budget) {
      throw BudgetHit{};
    }
    if (cand == 0) {
      if (size > best_size) {
        best = clique;
        best_size = size;
      }
      return;
    }
    if (size + colour_bound(cand) <= best_size) {
      return;
    }
    std::uint64_t rest = cand;
    while (rest) {
      int v = std::countr_zero(rest);
      std::uint64_t bit = std::uint64_t{1} << v;
      rest &= ~bit;
      // Candidates after v only: earlier vertices were covered by the
      // sibling branches already explored.
      expand(clique | bit, size + 1, rest & adj[v]);
      if (size + colour_bound(rest) <= best_size) {
        return;
      }
    }
  }
};

CliqueResult to_result(const CompatGraph& graph, const CliqueSearch& search) {
  CliqueResult out{ElementSet(graph.element_universe), {}, search.nodes};
  std::uint64_t bits = search.best;
  while (bits) {
    int v = std::countr_zero(bits);
    bits &= bits - 1;
    out.vertex_ids.push_back(search.order[v]);
  }
  std::sort(out.vertex_ids.begin(), out.vertex_ids.end());
  for (int v : out.vertex_ids) {
    out.members.insert(graph.vertices[v]);
  }
  return out;
}

}  // namespace

CliqueResult max_clique(const CompatGraph& graph, const MaxCliqueOptions& options) {
  const int n = graph.vertex_count();
  CliqueSearch search;
  search.n = n;
  search.budget = options.node_budget;
  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int a, int b) { return graph.degree(a) > graph.degree(b); });
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) {
    rank[search.order[i]] = i;
  }
  search.adj.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && graph.adjacent(search.order[u], search.order[v])) {
        search.adj[u] |= std::uint64_t{1} << v;
      }
    }
  }
  std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  try {
    search.expand(0, 0, all);
  } catch (const BudgetHit&) {
    throw CliqueBudgetError(to_result(graph, search), options.node_budget);
  }
  return to_result(graph, search);
}

CliqueResult max_chain_clique(const CayleyTable& table, const MaxCliqueOptions& options) {
  return max_clique(chain_graph(table), options);
}

CliqueResult max_antichain_clique(const CayleyTable& table, const MaxCliqueOptions& options) {
  return max_clique(antichain_graph(table), options);
}

int max_chain_size(const CayleyTable& table, const MaxCliqueOptions& options) {
  return max_chain_clique(table, options).members.size();
}

int max_antichain_size(const CayleyTable& table, const MaxCliqueOptions& options) {
  return max_antichain_clique(table, options).members.size();
}

bool is_semilattice(const CayleyTable& table) {
  const int n = table.order();
  for (Element x = 0; x < n; ++x) {
    if (table.at(x, x) != x) {
      return false;
    }
    for (Element y = x + 1; y < n; ++y) {
      if (table.at(x, y) != table.at(y, x)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Kuhn's augmenting-path matching on the strict-order pairs u < v.
struct ChainMatcher {
  int n;
  std::vector<std::uint64_t> succ;  // succ[u]: bit v set iff u < v
  std::vector<int> match_from;      // u -> chosen successor, -1 if none
  std::vector<int> match_to;        // v -> chosen predecessor, -1 if none

  bool augment(int u, std::uint64_t& visited) {
    std::uint64_t options = succ[u] & ~visited;
    while (options) {
      int v = std::countr_zero(options);
      options &= options - 1;
      visited |= std::uint64_t{1} << v;
      if (match_to[v] < 0 || augment(match_to[v], visited)) {
        match_from[u] = v;
        match_to[v] = u;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<ElementSet> min_chain_cover(const CayleyTable& table) {
  if (!is_semilattice(table)) {
    throw std::invalid_argument("min_chain_cover requires a semilattice");
  }
  const int n = table.order();
  ChainMatcher m;
  m.n = n;
  m.succ.assign(n, 0);
  m.match_from.assign(n, -1);
  m.match_to.assign(n, -1);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y && table.at(x, y) == x) {  // x <= y, strictly
        m.succ[x] |= std::uint64_t{1} << y;
      }
    }
  }
  for (Element u = 0; u < n; ++u) {
    std::uint64_t visited = 0;
    m.augment(u, visited);
  }
  // Chains are the paths of the matching: follow successor links from the
  // elements no chain link enters.
  std::vector<ElementSet> cover;
  for (Element start = 0; start < n; ++start) {
    if (m.match_to[start] >= 0) {
      continue;
    }
    ElementSet chain(n);
    for (Element x = start; x >= 0; x = m.match_from[x]) {
      chain.insert(x);
    }
    cover.push_back(chain);
  }
  return cover;
}

}  // namespace semichain
