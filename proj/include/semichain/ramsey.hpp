#pragma once

#include <stdexcept>
#include <vector>

#include "semichain/cayley_table.hpp"

namespace semichain {

// Total colouring of the pairs (n, m) with 0 <= n < m < item_count.
class PairColoring {
 public:
  PairColoring(int item_count, int palette_size);

  int item_count() const { return item_count_; }
  int palette_size() const { return palette_size_; }
  long long pair_count() const {
    return static_cast<long long>(item_count_) * (item_count_ - 1) / 2;
  }

  int color(int n, int m) const { return colors_[pair_index(n, m)]; }
  void set_color(int n, int m, int c);

 private:
  std::size_t pair_index(int n, int m) const;

  int item_count_;
  int palette_size_;
  std::vector<std::uint8_t> colors_;
};

// Five colours by which absorption equation holds first: 0 if x_n x_m = x_n,
// 1 if x_m x_n = x_n, 2 if x_n x_m = x_m, 3 if x_m x_n = x_m, 4 otherwise.
// The cases can overlap; the listed order wins. Elements must be distinct.
PairColoring absorption_coloring(const CayleyTable& table, const std::vector<Element>& xs);

// Six mutually exclusive colours for pairs of distinct idempotents, by the
// membership pattern of both ordered products in {e_n, e_m}:
//   0: both products inside
//   1: e_n e_m = e_n,  e_m e_n outside      2: e_n e_m = e_m,  e_m e_n outside
//   3: e_n e_m outside, e_m e_n = e_n       4: e_n e_m outside, e_m e_n = e_m
//   5: both products outside
// Exactly one case matches every pair; a mismatch throws.
PairColoring idempotent_coloring(const CayleyTable& table, const std::vector<Element>& es);

struct MonochromaticSubset {
  int color = 0;             // designated 0 for a single item
  std::vector<int> indices;  // ascending
  int guarantee = 0;         // size the pivot scheme certifies in advance
};

// Pivot-and-refine extraction: repeatedly take the least remaining index as
// pivot and keep its largest colour class, then return the pivots of the
// most frequent pivot colour plus the final pivot. The result is always
// monochromatic; a constant colouring returns the full index set.
MonochromaticSubset greedy_monochromatic(const PairColoring& coloring);

// The pivot premise e_n e_m = e_n failed at the named pair.
class ChainPremiseError : public std::invalid_argument {
 public:
  ChainPremiseError(int n, int m, Element product)
      : std::invalid_argument("premise violated at pair (" + std::to_string(n) + ", " +
                              std::to_string(m) + "): e_n * e_m != e_n (product " +
                              std::to_string(product) + ")"),
        n(n),
        m(m) {}

  int n;
  int m;
};

// Requires e_n e_m = e_n for all n < m (premise; ChainPremiseError names the
// failing pair otherwise). Returns {e_n * e_k : n > k} and certifies it is a
// chain; a conclusion failure would falsify the underlying algebra and
// throws std::logic_error.
ElementSet pivot_product_chain(const CayleyTable& table, const std::vector<Element>& es, int k);

}  // namespace semichain
