#include "semichain/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace semichain {

PowerProfile power_profile(const CayleyTable& table, Element x) {
  // Walk x, x^2, x^3, ... recording positions; at order <= 64 the sequence
  // repeats within 64 steps, so storing it whole is trivial.
  std::vector<Element> seq;           // seq[k] = x^(k+1)
  std::vector<int> pos(table.order(), -1);  // first exponent-1 at which an element appears
  Element p = x;
  while (pos[p] < 0) {
    pos[p] = static_cast<int>(seq.size());
    seq.push_back(p);
    p = table.at(p, x);
  }
  const int index = pos[p] + 1;                       // minimal m with x^(m+r) = x^m
  const int period = static_cast<int>(seq.size()) - pos[p];  // minimal r

  // Unique multiple of the period in [index, index+period-1].
  int k = ((index + period - 1) / period) * period;
  Element e = seq[k - 1];
  if (table.at(e, e) != e) {
    throw std::logic_error("power profile produced a non-idempotent power");
  }
  return PowerProfile{x, index, period, e};
}

ElementSet element_powers(const CayleyTable& table, Element x) {
  ElementSet out(table.order());
  Element p = x;
  while (!out.contains(p)) {
    out.insert(p);
    p = table.at(p, x);
  }
  return out;
}

ElementSet idempotents(const CayleyTable& table) {
  ElementSet out(table.order());
  for (Element x = 0; x < table.order(); ++x) {
    if (table.at(x, x) == x) {
      out.insert(x);
    }
  }
  return out;
}

const ElementSet* FiberDecomposition::find(Element e) const {
  for (const auto& [idem, members] : fibers) {
    if (idem == e) {
      return &members;
    }
  }
  return nullptr;
}

FiberDecomposition fiber_decomposition(const CayleyTable& table) {
  const int n = table.order();
  const ElementSet idems = idempotents(table);
  FiberDecomposition out;
  for (Element e : idems) {
    out.fibers.emplace_back(e, ElementSet(n));
  }
  for (Element x = 0; x < n; ++x) {
    Element e = power_profile(table, x).idempotent_power;
    // The existential reading must agree: e is a power of x, and no other
    // idempotent occurs among the powers of x.
    ElementSet powers = element_powers(table, x);
    if (!powers.contains(e) || (powers & idems) != ElementSet(n, {e})) {
      throw std::logic_error("fiber characterizations disagree at element " + std::to_string(x));
    }
    for (auto& [idem, members] : out.fibers) {
      if (idem == e) {
        members.insert(x);
        break;
      }
    }
  }
  return out;
}

ElementSet principal_right_ideal(const CayleyTable& table, Element x) {
  ElementSet out = left_translate(table, x, table.all_elements());  // xS
  out.insert(x);
  return out;
}

ElementSet principal_left_ideal(const CayleyTable& table, Element x) {
  ElementSet out = right_translate(table, x, table.all_elements());  // Sx
  out.insert(x);
  return out;
}

HClass h_class(const CayleyTable& table, Element x) {
  const int n = table.order();
  HClass out{x, ElementSet(n), principal_right_ideal(table, x), principal_left_ideal(table, x)};
  for (Element y = 0; y < n; ++y) {
    if (principal_right_ideal(table, y) == out.right_ideal &&
        principal_left_ideal(table, y) == out.left_ideal) {
      out.members.insert(y);
    }
  }
  return out;
}

std::vector<HClass> h_class_partition(const CayleyTable& table) {
  const int n = table.order();
  std::vector<HClass> out;
  ElementSet seen(n);
  for (Element x = 0; x < n; ++x) {
    if (seen.contains(x)) {
      continue;
    }
    HClass h = h_class(table, x);
    seen |= h.members;
    out.push_back(std::move(h));
  }
  return out;
}

std::optional<GroupViolation> group_hclass_violation(const CayleyTable& table, Element e) {
  if (table.at(e, e) != e) {
    throw std::invalid_argument("element " + std::to_string(e) + " is not idempotent");
  }
  const ElementSet h = h_class(table, e).members;
  for (Element a : h) {
    for (Element b : h) {
      Element p = table.at(a, b);
      if (!h.contains(p)) {
        return GroupViolation{GroupViolation::Kind::closure, a, b, p};
      }
    }
  }
  for (Element a : h) {
    if (table.at(e, a) != a) {
      return GroupViolation{GroupViolation::Kind::identity, a, -1, table.at(e, a)};
    }
    if (table.at(a, e) != a) {
      return GroupViolation{GroupViolation::Kind::identity, a, -1, table.at(a, e)};
    }
  }
  for (Element a : h) {
    bool found = false;
    for (Element b : h) {
      if (table.at(a, b) == e && table.at(b, a) == e) {
        found = true;
        break;
      }
    }
    if (!found) {
      return GroupViolation{GroupViolation::Kind::inverse, a, -1, -1};
    }
  }
  return std::nullopt;
}

bool is_group_hclass(const CayleyTable& table, Element e) {
  return !group_hclass_violation(table, e).has_value();
}

}  // namespace semichain
