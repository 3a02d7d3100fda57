#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pdtool/cli.hpp"
#include "pdtool/json_io.hpp"
#include "pdtool/smith.hpp"

namespace py = pybind11;
using namespace pdtool;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_python(x));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_python(it.value());
      return out;
    }
    default: return py::none();
  }
}

py::object big(const Integer& v) { return py::int_(py::str(v.get_str())); }

Route route_of(const std::string& s) {
  if (s == "reduced") return Route::Reduced;
  if (s == "bar") return Route::Bar;
  if (s == "periodic") return Route::Periodic;
  throw PreconditionError("unknown route '" + s + "'");
}

DimensionProfile profile_of(const std::vector<std::pair<std::optional<int>, int>>& comps, bool one_connected) {
  DimensionProfile p;
  for (const auto& [g, e] : comps) p.components.push_back({g, e});
  p.fixed_inclusion_1_connected = one_connected;
  return p;
}

py::list dense(const IntMatrix& m) {
  py::list rows;
  for (const auto& r : m.to_dense()) {
    py::list row;
    for (const auto& v : r) row.append(big(v));
    rows.append(row);
  }
  return rows;
}

py::dict invariants(const AbelianInvariants& a) {
  py::dict d;
  d["free_rank"] = a.free_rank;
  py::list t;
  for (const auto& v : a.torsion) t.append(big(v));
  d["torsion"] = t;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cohomology of finite groups, periodicity, Swan counts and connectivity estimates";

  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_static(
          "family", [](const std::string& name) { return std::const_pointer_cast<FiniteGroup>(from_family(FamilyDescriptor::parse(name))); },
          py::arg("name"), "Group from shorthand such as 'Q8', 'C2xC4' or 'SL23'.")
      .def_static(
          "from_permutations",
          [](const std::vector<Permutation>& gens) { return std::const_pointer_cast<FiniteGroup>(from_permutations(gens)); },
          py::arg("generators"))
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", [](const FiniteGroup& g) { return g.origin().family; })
      .def_property_readonly("element_orders",
                             [](const FiniteGroup& g) {
                               return std::vector<std::uint32_t>(g.element_orders().begin(), g.element_orders().end());
                             })
      .def("mul", &FiniteGroup::mul)
      .def("validate", [](const FiniteGroup& g) { return g.validate(); })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + (g.origin().family.empty() ? std::string("?") : g.origin().family) + " of order " +
               std::to_string(g.order()) + ">";
      });

  using GP = std::shared_ptr<FiniteGroup>;
  m.def("sylow_order", [](const GP& g, int p) { return sylow(g, p).order(); }, py::arg("group"), py::arg("p"));
  m.def("has_noncyclic_abelian_subgroup", [](const GP& g) { return has_noncyclic_abelian_subgroup(*g); });
  m.def("is_periodic_via_abelian", [](const GP& g) { return is_periodic_via_abelian(*g); });
  m.def("is_periodic_via_sylow", [](const GP& g) { return is_periodic_via_sylow(g); });

  m.def(
      "cohomology", [](const GP& g, int n, const std::string& route) { return invariants(cohomology(g, n, route_of(route))); },
      py::arg("group"), py::arg("n"), py::arg("route") = "reduced");
  m.def(
      "homology", [](const GP& g, int n, const std::string& route) { return invariants(homology(g, n, route_of(route))); },
      py::arg("group"), py::arg("n"), py::arg("route") = "reduced");
  m.def(
      "period", [](const GP& g, int bound, const std::string& route) { return period(g, bound, route_of(route)); },
      py::arg("group"), py::arg("bound") = 8, py::arg("route") = "reduced");
  m.def(
      "periodicity_report",
      [](const GP& g, int bound, const std::string& route) {
        return to_python(report_to_json(periodicity_report(g, bound, route_of(route))));
      },
      py::arg("group"), py::arg("bound") = 8, py::arg("route") = "reduced");

  m.def("is_unit_degree", [](const GP& g, int n) { return is_unit_degree(g, n); }, py::arg("group"), py::arg("n"));
  m.def(
      "classify_hreps", [](const GP& g, int d) { return to_python(swan_to_json(classify_hreps(g, d))); },
      py::arg("group"), py::arg("d"));
  m.def(
      "count_free_invertible_spectra", [](const GP& g, int d) { return count_free_invertible_spectra(g, d); },
      py::arg("group"), py::arg("d"));

  m.def(
      "isov_space_connectivity",
      [](const std::vector<std::pair<std::optional<int>, int>>& comps, bool one_connected) -> py::object {
        const auto k = isov_space_connectivity(profile_of(comps, one_connected));
        if (!k) return py::none();
        return to_python(bound_to_json(*k));
      },
      py::arg("components"), py::arg("one_connected") = false,
      "Components are (d_G, d_e) pairs with d_G None for empty fixed points.");
  m.def(
      "explain_isov_connectivity",
      [](const std::vector<std::pair<std::optional<int>, int>>& comps, bool one_connected) {
        return to_python(trace_to_json(explain_isov_connectivity(profile_of(comps, one_connected))));
      },
      py::arg("components"), py::arg("one_connected") = false);

  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<long long>>& rows) {
        std::vector<std::vector<Integer>> d;
        for (const auto& r : rows) {
          d.emplace_back();
          for (long long v : r) d.back().emplace_back(static_cast<long>(v));
        }
        const auto s = smith_normal_form(IntMatrix::from_dense(d));
        py::dict out;
        py::list pivots;
        for (const auto& p : s.pivots) pivots.append(big(p));
        out["pivots"] = pivots;
        out["U"] = dense(s.U);
        out["D"] = dense(s.D);
        out["V"] = dense(s.V);
        return out;
      },
      py::arg("rows"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> full{"pdtool"};
        full.insert(full.end(), args.begin(), args.end());
        const int code = cli::run(full, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
