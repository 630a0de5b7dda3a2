#include "semichain/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace semichain {

namespace {

constexpr int kCanonicalMaxOrder = 8;
constexpr int kEnumerateMaxOrder = 4;

std::vector<Element> relabeled_flat(const CayleyTable& table, const std::vector<int>& perm,
                                    bool transpose) {
  const int n = table.order();
  std::vector<Element> flat(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element p = transpose ? table.at(y, x) : table.at(x, y);
      flat[static_cast<std::size_t>(perm[x]) * n + perm[y]] = perm[p];
    }
  }
  return flat;
}

}  // namespace

CanonicalForm canonical_form(const CayleyTable& table, Symmetry symmetry) {
  const int n = table.order();
  if (n > kCanonicalMaxOrder) {
    throw std::invalid_argument("canonical_form supports order <= " +
                                std::to_string(kCanonicalMaxOrder));
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{n, table.products()};
  do {
    for (int t = 0; t < (symmetry == Symmetry::iso_and_anti ? 2 : 1); ++t) {
      std::vector<Element> flat = relabeled_flat(table, perm, t == 1);
      if (flat < best.flat) {
        best.flat = std::move(flat);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_canonical(const CayleyTable& table, Symmetry symmetry) {
  return canonical_form(table, symmetry).flat == table.products();
}

std::uint64_t canonical_digest(const CanonicalForm& form) {
  // FNV-1a over the order and the flat entries.
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(form.order));
  for (Element e : form.flat) {
    mix(static_cast<std::uint64_t>(e));
  }
  return h;
}

namespace {

// Cell-by-cell backtracking in row-major order. After each placement every
// triple whose four lookups are now determined must already associate.
struct EnumerationSearch {
  int n;
  Symmetry symmetry;
  const std::function<void(const CayleyTable&)>& yield;
  std::vector<Element> cells;  // n*n, -1 while unfilled

  Element at(Element x, Element y) const { return cells[static_cast<std::size_t>(x) * n + y]; }

  bool consistent() const {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = at(a, b);
        if (ab < 0) continue;
        for (Element c = 0; c < n; ++c) {
          Element bc = at(b, c);
          if (bc < 0) continue;
          Element left = at(ab, c);
          Element right = at(a, bc);
          if (left >= 0 && right >= 0 && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void fill(std::size_t cell) {
    if (cell == cells.size()) {
      CayleyTable table(n, cells);
      if (is_canonical(table, symmetry)) {
        yield(table);
      }
      return;
    }
    for (Element v = 0; v < n; ++v) {
      cells[cell] = v;
      if (consistent()) {
        fill(cell + 1);
      }
    }
    cells[cell] = -1;
  }
};

}  // namespace

void enumerate_semigroups(int order, Symmetry symmetry,
                          const std::function<void(const CayleyTable&)>& yield) {
  if (order < 1 || order > kEnumerateMaxOrder) {
    throw std::invalid_argument("enumeration supports orders 1.." +
                                std::to_string(kEnumerateMaxOrder));
  }
  EnumerationSearch search{order, symmetry, yield,
                           std::vector<Element>(static_cast<std::size_t>(order) * order, -1)};
  search.fill(0);
}

std::vector<CayleyTable> enumerate_semigroups(int order, Symmetry symmetry) {
  std::vector<CayleyTable> out;
  enumerate_semigroups(order, symmetry, [&](const CayleyTable& t) { out.push_back(t); });
  return out;
}

namespace {

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // negligible bias at these bounds
}

}  // namespace

CayleyTable random_semigroup(int max_order, std::uint64_t seed) {
  if (max_order < 1 || max_order > CayleyTable::max_order) {
    throw std::invalid_argument("max_order must lie in [1, " +
                                std::to_string(CayleyTable::max_order) + "]");
  }
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const int domain = 2 + static_cast<int>(next_below(rng, 3));  // 2..4 points
    const int gen_count = 1 + static_cast<int>(next_below(rng, 2));
    std::vector<std::vector<int>> elems;
    for (int g = 0; g < gen_count; ++g) {
      std::vector<int> f(domain);
      for (int i = 0; i < domain; ++i) {
        f[i] = static_cast<int>(next_below(rng, domain));
      }
      if (std::find(elems.begin(), elems.end(), f) == elems.end()) {
        elems.push_back(std::move(f));
      }
    }
    // Close under composition (apply left, then right) in discovery order.
    bool too_big = false;
    for (std::size_t i = 0; i < elems.size() && !too_big; ++i) {
      for (std::size_t j = 0; j < elems.size() && !too_big; ++j) {
        std::vector<int> fg(domain);
        for (int p = 0; p < domain; ++p) {
          fg[p] = elems[j][elems[i][p]];
        }
        if (std::find(elems.begin(), elems.end(), fg) == elems.end()) {
          elems.push_back(std::move(fg));
          too_big = static_cast<int>(elems.size()) > max_order;
        }
      }
    }
    if (too_big) {
      continue;
    }
    const int n = static_cast<int>(elems.size());
    std::vector<Element> products(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::vector<int> fg(domain);
        for (int p = 0; p < domain; ++p) {
          fg[p] = elems[j][elems[i][p]];
        }
        auto it = std::find(elems.begin(), elems.end(), fg);
        products[static_cast<std::size_t>(i) * n + j] =
            static_cast<Element>(it - elems.begin());
      }
    }
    return CayleyTable(n, std::move(products));
  }
  throw std::runtime_error("random_semigroup sampling budget exhausted");
}

}  // namespace semichain
