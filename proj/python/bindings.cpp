#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "semichain/cayley_table.hpp"
#include "semichain/enumerate.hpp"
#include "semichain/families.hpp"
#include "semichain/order.hpp"
#include "semichain/ramsey.hpp"
#include "semichain/sgt.hpp"
#include "semichain/structure.hpp"
#include "semichain/verify.hpp"

namespace py = pybind11;
using namespace semichain;

namespace {

std::vector<Element> to_list(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.size());
  for (Element x : s) {
    out.push_back(x);
  }
  return out;
}

ElementSet to_set(const CayleyTable& table, const std::vector<Element>& xs) {
  ElementSet out(table.order());
  for (Element x : xs) {
    out.insert(x);
  }
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& v : j) {
      out.append(json_to_py(v));
    }
    return out;
  }
  py::dict out;
  for (const auto& [key, value] : j.items()) {
    out[py::str(key)] = json_to_py(value);
  }
  return out;
}

std::optional<std::tuple<Element, Element, Element>> violation_tuple(
    const std::optional<PairViolation>& v) {
  if (!v) return std::nullopt;
  return std::make_tuple(v->x, v->y, v->xy);
}

}  // namespace

PYBIND11_MODULE(_semichain, m) {
  m.doc() = "Chain/antichain structure toolkit for finite semigroups.";

  py::class_<CayleyTable>(m, "CayleyTable")
      .def(py::init<int, std::vector<Element>, std::vector<std::string>>(), py::arg("order"),
           py::arg("products"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &CayleyTable::order)
      .def_property_readonly("products", &CayleyTable::products)
      .def_property_readonly("labels", &CayleyTable::labels)
      .def("at", &CayleyTable::at, py::arg("x"), py::arg("y"))
      .def("label", &CayleyTable::label, py::arg("x"))
      .def(py::self == py::self)
      .def("__repr__", [](const CayleyTable& t) {
        return "CayleyTable(order=" + std::to_string(t.order()) + ")";
      });

  py::class_<AssocCheck>(m, "AssocCheck")
      .def_readonly("x", &AssocCheck::x)
      .def_readonly("y", &AssocCheck::y)
      .def_readonly("z", &AssocCheck::z)
      .def_readonly("row", &AssocCheck::row)
      .def_readonly("col", &AssocCheck::col)
      .def_property_readonly("ok", [](const AssocCheck& c) { return bool(c); })
      .def("__bool__", [](const AssocCheck& c) { return bool(c); });

  py::class_<PowerProfile>(m, "PowerProfile")
      .def_readonly("element", &PowerProfile::element)
      .def_readonly("index", &PowerProfile::index)
      .def_readonly("period", &PowerProfile::period)
      .def_readonly("idempotent_power", &PowerProfile::idempotent_power)
      .def("__repr__", [](const PowerProfile& p) {
        return "PowerProfile(element=" + std::to_string(p.element) + ", index=" +
               std::to_string(p.index) + ", period=" + std::to_string(p.period) +
               ", idempotent_power=" + std::to_string(p.idempotent_power) + ")";
      });

  py::class_<PairColoring>(m, "PairColoring")
      .def_property_readonly("item_count", &PairColoring::item_count)
      .def_property_readonly("palette_size", &PairColoring::palette_size)
      .def("color", &PairColoring::color, py::arg("n"), py::arg("m"));

  py::class_<MonochromaticSubset>(m, "MonochromaticSubset")
      .def_readonly("color", &MonochromaticSubset::color)
      .def_readonly("indices", &MonochromaticSubset::indices)
      .def_readonly("guarantee", &MonochromaticSubset::guarantee);

  py::enum_<Symmetry>(m, "Symmetry")
      .value("iso", Symmetry::iso)
      .value("iso_and_anti", Symmetry::iso_and_anti);

  py::enum_<StockFamily>(m, "StockFamily")
      .value("left_zero", StockFamily::left_zero)
      .value("right_zero", StockFamily::right_zero)
      .value("zero", StockFamily::zero)
      .value("cyclic_group", StockFamily::cyclic_group);

  py::register_exception<CliqueBudgetError>(m, "CliqueBudgetError");
  py::register_exception<SgtParseError>(m, "SgtParseError");

  m.def("parse_sgt", py::overload_cast<const std::string&>(&parse_sgt), py::arg("text"));
  m.def("emit_sgt", &emit_sgt, py::arg("table"));
  m.def("load_sgt", &load_sgt, py::arg("path"));
  m.def("save_sgt", &save_sgt, py::arg("table"), py::arg("path"));

  m.def("validate_associativity", &validate_associativity, py::arg("table"));
  m.def("has_identity", &has_identity, py::arg("table"));
  m.def("adjoin_identity", &adjoin_identity, py::arg("table"));

  m.def("idempotents", [](const CayleyTable& t) { return to_list(idempotents(t)); },
        py::arg("table"));
  m.def("power_profile", &power_profile, py::arg("table"), py::arg("x"));
  m.def("element_powers", [](const CayleyTable& t, Element x) {
          return to_list(element_powers(t, x));
        }, py::arg("table"), py::arg("x"));
  m.def("fiber_decomposition", [](const CayleyTable& t) {
          py::dict out;
          for (const auto& [e, members] : fiber_decomposition(t).fibers) {
            out[py::int_(e)] = to_list(members);
          }
          return out;
        }, py::arg("table"));
  m.def("h_class", [](const CayleyTable& t, Element x) { return to_list(h_class(t, x).members); },
        py::arg("table"), py::arg("x"));
  m.def("h_class_partition", [](const CayleyTable& t) {
          std::vector<std::vector<Element>> out;
          for (const auto& h : h_class_partition(t)) {
            out.push_back(to_list(h.members));
          }
          return out;
        }, py::arg("table"));
  m.def("is_group_hclass", &is_group_hclass, py::arg("table"), py::arg("e"));

  m.def("is_chain", [](const CayleyTable& t, const std::vector<Element>& xs) {
          return is_chain(t, to_set(t, xs));
        }, py::arg("table"), py::arg("members"));
  m.def("is_antichain", [](const CayleyTable& t, const std::vector<Element>& xs) {
          return is_antichain(t, to_set(t, xs));
        }, py::arg("table"), py::arg("members"));
  m.def("chain_violation", [](const CayleyTable& t, const std::vector<Element>& xs) {
          return violation_tuple(chain_violation(t, to_set(t, xs)));
        }, py::arg("table"), py::arg("members"));
  m.def("antichain_violation", [](const CayleyTable& t, const std::vector<Element>& xs) {
          return violation_tuple(antichain_violation(t, to_set(t, xs)));
        }, py::arg("table"), py::arg("members"));
  m.def("max_chain", [](const CayleyTable& t) { return to_list(max_chain_clique(t).members); },
        py::arg("table"));
  m.def("max_antichain", [](const CayleyTable& t) {
          return to_list(max_antichain_clique(t).members);
        }, py::arg("table"));
  m.def("max_chain_size", [](const CayleyTable& t) { return max_chain_size(t); },
        py::arg("table"));
  m.def("max_antichain_size", [](const CayleyTable& t) { return max_antichain_size(t); },
        py::arg("table"));
  m.def("is_semilattice", &is_semilattice, py::arg("table"));
  m.def("min_chain_cover", [](const CayleyTable& t) {
          std::vector<std::vector<Element>> out;
          for (const auto& chain : min_chain_cover(t)) {
            out.push_back(to_list(chain));
          }
          return out;
        }, py::arg("table"));

  m.def("monogenic", &monogenic, py::arg("index"), py::arg("period"));
  m.def("stock", &stock, py::arg("family"), py::arg("n"));
  m.def("level_truncation", [](int max_level) { return level_truncation(max_level).table; },
        py::arg("max_level"));

  m.def("enumerate_semigroups",
        [](int order, Symmetry symmetry) {
          return enumerate_semigroups(order, symmetry);
        },
        py::arg("order"), py::arg("symmetry") = Symmetry::iso_and_anti);
  m.def("random_semigroup", &random_semigroup, py::arg("max_order"), py::arg("seed"));

  m.def("absorption_coloring", &absorption_coloring, py::arg("table"), py::arg("elements"));
  m.def("idempotent_coloring", &idempotent_coloring, py::arg("table"), py::arg("elements"));
  m.def("greedy_monochromatic", &greedy_monochromatic, py::arg("coloring"));
  m.def("pivot_product_chain", [](const CayleyTable& t, const std::vector<Element>& es, int k) {
          return to_list(pivot_product_chain(t, es, k));
        }, py::arg("table"), py::arg("elements"), py::arg("k"));

  m.def("run_checks", [](const std::string& table_id, const CayleyTable& t) {
          return json_to_py(report_to_json(run_checks(table_id, t)));
        }, py::arg("table_id"), py::arg("table"));
  m.def("run_suite", [](const std::string& corpus, bool fail_fast, int jobs) {
          SuiteOptions options;
          options.fail_fast = fail_fast;
          options.jobs = jobs;
          return json_to_py(suite_to_json(run_suite(corpus, options)));
        }, py::arg("corpus"), py::arg("fail_fast") = false, py::arg("jobs") = 1);
}
