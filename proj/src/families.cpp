#include "semichain/families.hpp"

#include <stdexcept>

namespace semichain {

bool valid_level_element(const LevelElement& a) {
  if (a.level < 1) {
    return false;
  }
  if (a.level % 2 == 1) {
    return a.slot == 0;
  }
  return a.slot >= 1 && a.slot <= a.level;
}

namespace {

void require_valid(const LevelElement& a) {
  if (!valid_level_element(a)) {
    throw std::invalid_argument("invalid level element " + a.to_string());
  }
}

}  // namespace

LevelElement level_meet(const LevelElement& a, const LevelElement& b) {
  require_valid(a);
  require_valid(b);
  if (a.level == b.level) {
    if (a.slot == b.slot) {
      return a;
    }
    return LevelElement{a.level - 1, 0};
  }
  return a.level < b.level ? a : b;
}

LevelElement level_retract(const LevelElement& a) {
  require_valid(a);
  if (a.level % 2 == 1) {
    return a;
  }
  return LevelElement{a.level - 1, 0};
}

int LevelTruncation::index_of(const LevelElement& a) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == a) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

LevelTruncation level_truncation(int max_level) {
  if (max_level < 1) {
    throw std::invalid_argument("max_level must be positive");
  }
  std::vector<LevelElement> elems;
  for (int level = 1; level <= max_level; ++level) {
    if (level % 2 == 1) {
      elems.push_back({level, 0});
    } else {
      for (int slot = 1; slot <= level; ++slot) {
        elems.push_back({level, slot});
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<Element> products(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) {
    labels.push_back(e.to_string());
  }
  auto index_of = [&](const LevelElement& e) {
    for (int i = 0; i < n; ++i) {
      if (elems[i] == e) {
        return i;
      }
    }
    throw std::logic_error("meet left the truncation");
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      products[static_cast<std::size_t>(i) * n + j] = index_of(level_meet(elems[i], elems[j]));
    }
  }
  return LevelTruncation{CayleyTable(n, std::move(products), std::move(labels)),
                         std::move(elems), max_level};
}

CayleyTable monogenic(int index, int period) {
  if (index < 1 || period < 1) {
    throw std::invalid_argument("index and period must be positive");
  }
  const int n = index + period - 1;  // exponents 1..n
  auto fold = [&](int exponent) {
    if (exponent > n) {
      exponent = index + (exponent - index) % period;
    }
    return exponent;
  };
  std::vector<Element> products(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      products[static_cast<std::size_t>(a - 1) * n + (b - 1)] = fold(a + b) - 1;
    }
  }
  return CayleyTable(n, std::move(products));
}

CayleyTable stock(StockFamily family, int n) {
  if (n < 1) {
    throw std::invalid_argument("family size must be positive");
  }
  std::vector<Element> products(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element p = 0;
      switch (family) {
        case StockFamily::left_zero: p = x; break;
        case StockFamily::right_zero: p = y; break;
        case StockFamily::zero: p = 0; break;
        case StockFamily::cyclic_group: p = (x + y) % n; break;
      }
      products[static_cast<std::size_t>(x) * n + y] = p;
    }
  }
  return CayleyTable(n, std::move(products));
}

}  // namespace semichain
