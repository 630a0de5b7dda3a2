#include "semichain/cayley_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace semichain {

CayleyTable::CayleyTable(int order, std::vector<Element> products, std::vector<std::string> labels)
    : order_(order), products_(std::move(products)), labels_(std::move(labels)) {
  if (order < 1 || order > max_order) {
    throw std::invalid_argument("table order must lie in [1, " + std::to_string(max_order) +
                                "], got " + std::to_string(order));
  }
  if (products_.size() != static_cast<std::size_t>(order) * order) {
    throw std::invalid_argument("product table must have order*order entries");
  }
  if (!labels_.empty()) {
    if (labels_.size() != static_cast<std::size_t>(order)) {
      throw std::invalid_argument("labels must cover every element");
    }
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
      throw std::invalid_argument("labels must be pairwise distinct");
    }
  }
}

std::string CayleyTable::label(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

std::string CayleyTable::label_set(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ",";
    out += label(x);
    first = false;
  }
  return out + "}";
}

namespace {

constexpr int kFullScanMax = 16;

AssocCheck malformed_entry(const CayleyTable& t) {
  for (Element x = 0; x < t.order(); ++x) {
    for (Element y = 0; y < t.order(); ++y) {
      Element p = t.at(x, y);
      if (p < 0 || p >= t.order()) {
        AssocCheck c;
        c.status = AssocCheck::Status::malformed;
        c.row = x;
        c.col = y;
        return c;
      }
    }
  }
  return {};
}

// Lexicographically least (x, y, z) with (xy)z != x(yz), or ok.
AssocCheck least_counterexample(const CayleyTable& t) {
  const int n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = t.at(x, y);
      for (Element z = 0; z < n; ++z) {
        if (t.at(xy, z) != t.at(x, t.at(y, z))) {
          AssocCheck c;
          c.status = AssocCheck::Status::counterexample;
          c.x = x;
          c.y = y;
          c.z = z;
          return c;
        }
      }
    }
  }
  return {};
}

// A magma generating set: elements outside S*S must be generators; the rest
// are added greedily until the closure under the table operation is all of S.
std::vector<Element> generating_set(const CayleyTable& t) {
  const int n = t.order();
  ElementSet products(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      products.insert(t.at(x, y));
    }
  }
  std::vector<Element> gens;
  ElementSet closure(n);
  auto close_over = [&](Element g) {
    gens.push_back(g);
    closure.insert(g);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element a : closure) {
        for (Element b : closure) {
          Element p = t.at(a, b);
          if (!closure.contains(p)) {
            closure.insert(p);
            grew = true;
          }
        }
      }
    }
  };
  for (Element x = 0; x < n; ++x) {
    if (!products.contains(x)) {
      close_over(x);
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!closure.contains(x)) {
      close_over(x);
    }
  }
  return gens;
}

// Light's test: with G a magma generating set, associativity holds iff
// x(gy) = (xg)y for every g in G and all x, y.
bool light_test(const CayleyTable& t, const std::vector<Element>& gens) {
  const int n = t.order();
  for (Element g : gens) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (t.at(x, t.at(g, y)) != t.at(t.at(x, g), y)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

AssocCheck validate_associativity(const CayleyTable& table) {
  if (AssocCheck m = malformed_entry(table); m.status == AssocCheck::Status::malformed) {
    return m;
  }
  if (table.order() <= kFullScanMax) {
    return least_counterexample(table);
  }
  if (light_test(table, generating_set(table))) {
    return {};
  }
  return least_counterexample(table);
}

std::optional<Element> has_identity(const CayleyTable& table) {
  const int n = table.order();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = table.at(e, x) == x && table.at(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

CayleyTable adjoin_identity(const CayleyTable& table) {
  if (has_identity(table)) {
    return table;
  }
  const int n = table.order();
  const int m = n + 1;
  std::vector<Element> products(static_cast<std::size_t>(m) * m);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      products[static_cast<std::size_t>(x) * m + y] = table.at(x, y);
    }
  }
  for (Element x = 0; x < m; ++x) {
    products[static_cast<std::size_t>(x) * m + n] = x;
    products[static_cast<std::size_t>(n) * m + x] = x;
  }
  std::vector<std::string> labels;
  if (table.has_labels()) {
    labels = table.labels();
    std::string fresh = "1";
    while (std::find(labels.begin(), labels.end(), fresh) != labels.end()) {
      fresh += "'";
    }
    labels.push_back(fresh);
  }
  return CayleyTable(m, std::move(products), std::move(labels));
}

ElementSet left_translate(const CayleyTable& table, Element x, const ElementSet& a) {
  ElementSet out(table.order());
  for (Element y : a) {
    out.insert(table.at(x, y));
  }
  return out;
}

ElementSet right_translate(const CayleyTable& table, Element x, const ElementSet& a) {
  ElementSet out(table.order());
  for (Element y : a) {
    out.insert(table.at(y, x));
  }
  return out;
}

}  // namespace semichain
