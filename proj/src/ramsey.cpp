#include "semichain/ramsey.hpp"

#include <algorithm>
#include <unordered_set>

#include "semichain/order.hpp"

namespace semichain {

PairColoring::PairColoring(int item_count, int palette_size)
    : item_count_(item_count), palette_size_(palette_size) {
  if (item_count < 1) {
    throw std::invalid_argument("item_count must be positive");
  }
  if (palette_size < 1 || palette_size > 255) {
    throw std::invalid_argument("palette_size must lie in [1, 255]");
  }
  colors_.assign(static_cast<std::size_t>(pair_count()), 0);
}

std::size_t PairColoring::pair_index(int n, int m) const {
  if (n < 0 || m <= n || m >= item_count_) {
    throw std::out_of_range("pair (" + std::to_string(n) + ", " + std::to_string(m) +
                            ") outside 0 <= n < m < " + std::to_string(item_count_));
  }
  // Row n starts after the triangle above it.
  return static_cast<std::size_t>(n) * (2 * item_count_ - n - 1) / 2 + (m - n - 1);
}

void PairColoring::set_color(int n, int m, int c) {
  if (c < 0 || c >= palette_size_) {
    throw std::out_of_range("color " + std::to_string(c) + " outside palette");
  }
  colors_[pair_index(n, m)] = static_cast<std::uint8_t>(c);
}

namespace {

void require_distinct(const CayleyTable& table, const std::vector<Element>& xs) {
  std::unordered_set<Element> seen;
  for (Element x : xs) {
    if (x < 0 || x >= table.order()) {
      throw std::invalid_argument("element " + std::to_string(x) + " outside the table");
    }
    if (!seen.insert(x).second) {
      throw std::invalid_argument("repeated element " + std::to_string(x));
    }
  }
}

}  // namespace

PairColoring absorption_coloring(const CayleyTable& table, const std::vector<Element>& xs) {
  require_distinct(table, xs);
  PairColoring out(static_cast<int>(xs.size()), 5);
  for (int n = 0; n < out.item_count(); ++n) {
    for (int m = n + 1; m < out.item_count(); ++m) {
      Element nm = table.at(xs[n], xs[m]);
      Element mn = table.at(xs[m], xs[n]);
      int c = 4;
      if (nm == xs[n]) {
        c = 0;
      } else if (mn == xs[n]) {
        c = 1;
      } else if (nm == xs[m]) {
        c = 2;
      } else if (mn == xs[m]) {
        c = 3;
      }
      out.set_color(n, m, c);
    }
  }
  return out;
}

PairColoring idempotent_coloring(const CayleyTable& table, const std::vector<Element>& es) {
  require_distinct(table, es);
  for (Element e : es) {
    if (table.at(e, e) != e) {
      throw std::invalid_argument("element " + std::to_string(e) + " is not idempotent");
    }
  }
  PairColoring out(static_cast<int>(es.size()), 6);
  for (int n = 0; n < out.item_count(); ++n) {
    for (int m = n + 1; m < out.item_count(); ++m) {
      Element en = es[n], em = es[m];
      Element nm = table.at(en, em);
      Element mn = table.at(em, en);
      bool nm_in = nm == en || nm == em;
      bool mn_in = mn == en || mn == em;
      bool cases[6] = {
          nm_in && mn_in,
          nm == en && !mn_in,
          nm == em && !mn_in,
          !nm_in && mn == en,
          !nm_in && mn == em,
          !nm_in && !mn_in,
      };
      int matched = -1;
      int count = 0;
      for (int c = 0; c < 6; ++c) {
        if (cases[c]) {
          matched = c;
          ++count;
        }
      }
      if (count != 1) {
        throw std::logic_error("idempotent colouring cases are not well defined at pair (" +
                               std::to_string(n) + ", " + std::to_string(m) + ")");
      }
      out.set_color(n, m, matched);
    }
  }
  return out;
}

MonochromaticSubset greedy_monochromatic(const PairColoring& coloring) {
  const int n = coloring.item_count();
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) {
    remaining[i] = i;
  }

  std::vector<int> pivots;
  std::vector<int> pivot_colors;  // colour of the class each pivot kept
  while (!remaining.empty()) {
    int pivot = remaining.front();
    pivots.push_back(pivot);
    if (remaining.size() == 1) {
      pivot_colors.push_back(-1);  // final pivot joins any class
      break;
    }
    std::vector<std::vector<int>> classes(coloring.palette_size());
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      int other = remaining[i];
      classes[coloring.color(pivot, other)].push_back(other);
    }
    int best_color = 0;
    for (int c = 1; c < coloring.palette_size(); ++c) {
      if (classes[c].size() > classes[best_color].size()) {
        best_color = c;
      }
    }
    pivot_colors.push_back(best_color);
    remaining = std::move(classes[best_color]);
  }

  // Majority colour among the non-final pivots; the final pivot was inside
  // every kept class, so it extends whichever colour wins.
  std::vector<int> votes(coloring.palette_size(), 0);
  for (std::size_t i = 0; i + 1 < pivots.size(); ++i) {
    ++votes[pivot_colors[i]];
  }
  int winner = 0;
  for (int c = 1; c < coloring.palette_size(); ++c) {
    if (votes[c] > votes[winner]) {
      winner = c;
    }
  }

  MonochromaticSubset out;
  out.color = pivots.size() == 1 ? 0 : winner;
  for (std::size_t i = 0; i + 1 < pivots.size(); ++i) {
    if (pivot_colors[i] == winner) {
      out.indices.push_back(pivots[i]);
    }
  }
  out.indices.push_back(pivots.back());
  const int t = static_cast<int>(pivots.size());
  out.guarantee = (t - 1 + coloring.palette_size() - 1) / coloring.palette_size() + 1;
  return out;
}

ElementSet pivot_product_chain(const CayleyTable& table, const std::vector<Element>& es, int k) {
  require_distinct(table, es);
  const int count = static_cast<int>(es.size());
  if (k < 0 || k >= count) {
    throw std::invalid_argument("pivot index " + std::to_string(k) + " outside the list");
  }
  // Minimal hypotheses: the chain computation only uses the premise pairs
  // and the idempotency of the pivot itself.
  if (table.at(es[k], es[k]) != es[k]) {
    throw std::invalid_argument("pivot element " + std::to_string(es[k]) + " is not idempotent");
  }
  for (int n = 0; n < count; ++n) {
    for (int m = n + 1; m < count; ++m) {
      Element p = table.at(es[n], es[m]);
      if (p != es[n]) {
        throw ChainPremiseError(n, m, p);
      }
    }
  }
  ElementSet z(table.order());
  for (int n = k + 1; n < count; ++n) {
    z.insert(table.at(es[n], es[k]));
  }
  if (auto bad = chain_violation(table, z)) {
    throw std::logic_error("pivot products failed to form a chain: " + std::to_string(bad->x) +
                           " * " + std::to_string(bad->y) + " = " + std::to_string(bad->xy));
  }
  return z;
}

}  // namespace semichain
