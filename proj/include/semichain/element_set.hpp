#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace semichain {

using Element = int;

// Dense subset of [0, universe) backed by a single 64-bit word.
// Analysis operations cap table order at 64, so one word always suffices.
class ElementSet {
 public:
  static constexpr int max_universe = 64;

  explicit ElementSet(int universe) : universe_(universe) {
    if (universe < 0 || universe > max_universe) {
      throw std::invalid_argument("ElementSet universe must lie in [0, 64], got " +
                                  std::to_string(universe));
    }
  }

  ElementSet(int universe, std::initializer_list<Element> members) : ElementSet(universe) {
    for (Element x : members) {
      insert(x);
    }
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    s.bits_ = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(Element x) const {
    check_range(x);
    return (bits_ >> x) & 1u;
  }

  void insert(Element x) {
    check_range(x);
    bits_ |= std::uint64_t{1} << x;
  }

  void erase(Element x) {
    check_range(x);
    bits_ &= ~(std::uint64_t{1} << x);
  }

  // Least member, or -1 when empty.
  Element min() const { return empty() ? -1 : std::countr_zero(bits_); }

  bool is_subset_of(const ElementSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(const ElementSet& other) const { return (bits_ & other.bits_) != 0; }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    a.bits_ |= b.bits_;
    return a;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    a.bits_ &= b.bits_;
    return a;
  }
  // Set difference.
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    a.bits_ &= ~b.bits_;
    return a;
  }
  ElementSet& operator|=(const ElementSet& b) {
    bits_ |= b.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& b) {
    bits_ &= b.bits_;
    return *this;
  }

  bool operator==(const ElementSet& other) const = default;

  std::uint64_t bits() const { return bits_; }
  static ElementSet from_bits(int universe, std::uint64_t bits) {
    ElementSet s(universe);
    if (universe < 64 && (bits >> universe) != 0) {
      throw std::invalid_argument("ElementSet bits exceed the universe");
    }
    s.bits_ = bits;
    return s;
  }

  // Iterates members in ascending order.
  class iterator {
   public:
    iterator(std::uint64_t bits) : bits_(bits) {}
    Element operator*() const { return std::countr_zero(bits_); }
    iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    bool operator!=(const iterator& other) const { return bits_ != other.bits_; }

   private:
    std::uint64_t bits_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (Element x : *this) {
      if (!first) out += ",";
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }

 private:
  void check_range(Element x) const {
    if (x < 0 || x >= universe_) {
      throw std::out_of_range("element " + std::to_string(x) + " outside universe [0, " +
                              std::to_string(universe_) + ")");
    }
  }

  int universe_;
  std::uint64_t bits_ = 0;
};

}  // namespace semichain
