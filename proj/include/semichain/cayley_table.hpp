#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "semichain/element_set.hpp"

namespace semichain {

// Multiplication table of a finite semigroup on elements {0, ..., order-1}.
//
// The constructor enforces shape (order in [1, 64], order*order entries,
// labels absent or pairwise distinct); entry ranges and associativity are
// the business of validate_associativity, which every untrusted table must
// pass before analysis operations touch it.
class CayleyTable {
 public:
  static constexpr int max_order = ElementSet::max_universe;

  CayleyTable(int order, std::vector<Element> products, std::vector<std::string> labels = {});

  int order() const { return order_; }

  Element at(Element x, Element y) const {
    assert(x >= 0 && x < order_ && y >= 0 && y < order_);
    return products_[static_cast<std::size_t>(x) * order_ + y];
  }

  const std::vector<Element>& products() const { return products_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Falls back to the index as text when no labels are present.
  std::string label(Element x) const;
  std::string label_set(const ElementSet& s) const;

  ElementSet all_elements() const { return ElementSet::full(order_); }

  bool operator==(const CayleyTable& other) const {
    return order_ == other.order_ && products_ == other.products_;
  }

 private:
  int order_;
  std::vector<Element> products_;
  std::vector<std::string> labels_;
};

struct AssocCheck {
  enum class Status { ok, counterexample, malformed };
  Status status = Status::ok;
  // Counterexample triple: (x*y)*z != x*(y*z).
  Element x = -1, y = -1, z = -1;
  // Malformed entry location (row, col element indices).
  int row = -1, col = -1;

  explicit operator bool() const { return status == Status::ok; }
};

// Checks that every entry is in range and that the operation is associative.
// Returns the lexicographically least failing triple on failure. Uses Light's
// generator-driven test for large tables, a full triple scan for small ones.
AssocCheck validate_associativity(const CayleyTable& table);

// The unique two-sided identity, if one exists.
std::optional<Element> has_identity(const CayleyTable& table);

// Returns the table unchanged when it already has an identity; otherwise a
// table of order+1 whose new last element is a two-sided identity.
CayleyTable adjoin_identity(const CayleyTable& table);

// xA = {x*a : a in A} and Ax = {a*x : a in A}.
ElementSet left_translate(const CayleyTable& table, Element x, const ElementSet& a);
ElementSet right_translate(const CayleyTable& table, Element x, const ElementSet& a);

}  // namespace semichain
