// Python bindings for the caylabel core: semigroup construction and
// predicates, Cayley graphs, exact spans with the closed forms, and the four
// verification entry points. Element subsets cross the boundary as plain
// lists of indices; grids and separation vectors as their string encodings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "caylabel/enumerate.hpp"
#include "caylabel/errors.hpp"
#include "caylabel/graph.hpp"
#include "caylabel/labelling.hpp"
#include "caylabel/rees.hpp"
#include "caylabel/semigroup.hpp"
#include "caylabel/verify.hpp"

namespace py = pybind11;
using namespace caylabel;

namespace {

ElementSubset subset_for(const Semigroup& s, const std::vector<int>& members) {
  return make_subset(s.order(), members);
}

KGrid grid_from(const std::string& text) {
  return text.empty() ? KGrid() : KGrid::parse(text);
}

DistanceConstraint kappa_from(const py::object& kappa) {
  if (py::isinstance<py::str>(kappa)) return DistanceConstraint::parse(kappa.cast<std::string>());
  return DistanceConstraint(kappa.cast<std::vector<long long>>());
}

std::string method_name(SpanMethod method) {
  return method == SpanMethod::formula ? "formula" : "exact";
}

py::dict span_result_dict(const SpanResult& result) {
  py::dict out;
  out["value"] = result.value;
  out["lower_bound"] = result.lower_bound;
  out["labels"] = result.certificate.labels;
  out["method"] = method_name(result.method);
  return out;
}

py::dict report_dict_fields(const VerificationReport& report) {
  py::dict out;
  out["theorem"] = report.theorem;
  out["universe"] = report.universe;
  out["checked"] = report.checked;
  out["confirmed"] = report.confirmed;
  out["weak_checked"] = report.weak_checked;
  out["weak_confirmed"] = report.weak_confirmed;
  out["partial"] = report.partial;
  out["counterexample_total"] = report.counterexample_total;
  out["seed"] = report.seed;
  out["effort"] = report.effort;
  return out;
}

}  // namespace

PYBIND11_MODULE(_caylabel, m) {
  m.doc() = "Cayley graph distance labelling toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);

  // --- semigroups ----------------------------------------------------------

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init([](int order, const std::vector<int>& table) {
             return Semigroup(order, table);
           }),
           py::arg("order"), py::arg("table"))
      .def_static("parse", [](const std::string& text) { return Semigroup::parse(text); },
                  py::arg("text"))
      .def_property_readonly("order", &Semigroup::order)
      .def("at", &Semigroup::at, py::arg("x"), py::arg("y"))
      .def("encode", &Semigroup::encode)
      .def("table_string", &Semigroup::to_table_string)
      .def("__repr__",
           [](const Semigroup& s) { return "Semigroup(\"" + s.encode() + "\")"; })
      .def("__eq__",
           [](const Semigroup& a, const Semigroup& b) { return a.encode() == b.encode(); })
      .def("__hash__", [](const Semigroup& s) { return py::hash(py::str(s.encode())); });

  m.def("cyclic_group", &cyclic_group, py::arg("order"));
  m.def("left_zero_band", &left_zero_band, py::arg("order"));
  m.def("right_zero_band", &right_zero_band, py::arg("order"));
  m.def("direct_product", &direct_product, py::arg("s"), py::arg("t"));
  m.def("adjoin_zero", &adjoin_zero, py::arg("s"));
  m.def("rees_matrix_semigroup", &rees_matrix_semigroup, py::arg("group"), py::arg("i_size"),
        py::arg("lambda_size"), py::arg("sandwich"));

  m.def("is_band", &is_band);
  m.def("is_left_zero_band", &is_left_zero_band);
  m.def("is_right_zero_band", &is_right_zero_band);
  m.def("is_rectangular_band", &is_rectangular_band);
  m.def("is_combinatorial", &is_combinatorial);
  m.def("is_left_simple", &is_left_simple);
  m.def("is_right_simple", &is_right_simple);
  m.def("is_simple", &is_simple);
  m.def("is_completely_simple", &is_completely_simple);
  m.def("is_left_cancellative", &is_left_cancellative);
  m.def("is_right_cancellative", &is_right_cancellative);
  m.def("is_left_group", &is_left_group);
  m.def("is_right_group", &is_right_group);
  m.def("is_group", &is_group);
  m.def("is_isomorphic", &is_isomorphic, py::arg("s"), py::arg("t"));

  m.def("find_identity", [](const Semigroup& s) -> py::object {
    const auto e = find_identity(s);
    return e ? py::cast(*e) : py::none();
  });
  m.def("idempotents",
        [](const Semigroup& s) { return subset_members(idempotents(s)); });
  m.def("generated_subsemigroup",
        [](const Semigroup& s, const std::vector<int>& members) {
          return subset_members(generated_subsemigroup(s, subset_for(s, members)));
        },
        py::arg("s"), py::arg("members"));
  m.def("set_product",
        [](const Semigroup& s, const std::vector<int>& a, const std::vector<int>& b) {
          return subset_members(set_product(s, subset_for(s, a), subset_for(s, b)));
        },
        py::arg("s"), py::arg("a"), py::arg("b"));
  m.def("green_classes", [](const Semigroup& s) {
    const GreenClasses green = green_classes(s);
    py::dict out;
    out["r_classes"] = green.r_count;
    out["l_classes"] = green.l_count;
    out["h_classes"] = green.h_count;
    out["r_class"] = green.r_class;
    out["l_class"] = green.l_class;
    out["h_class"] = green.h_class;
    return out;
  });
  m.def("rees_decompose", [](const Semigroup& s) {
    const ReesDecomposition d = rees_decompose(s);
    py::dict out;
    out["group"] = d.group;
    out["i_size"] = d.i_size;
    out["lambda_size"] = d.lambda_size;
    out["sandwich"] = d.sandwich;
    return out;
  });

  // --- enumeration ---------------------------------------------------------

  auto dedup_from = [](const std::string& name) {
    if (name == "none") return Dedup::none;
    if (name == "iso") return Dedup::iso;
    throw InputError("dedup must be 'none' or 'iso'");
  };
  m.def("count_semigroups",
        [dedup_from](int order, const std::string& dedup, int cap) {
          return count_semigroups(order, dedup_from(dedup), cap);
        },
        py::arg("order"), py::arg("dedup") = "none",
        py::arg("cap") = default_enumeration_cap());
  m.def("all_semigroups",
        [dedup_from](int order, const std::string& dedup, int cap) {
          return all_semigroups(order, dedup_from(dedup), cap);
        },
        py::arg("order"), py::arg("dedup") = "none",
        py::arg("cap") = default_enumeration_cap());

  // --- graphs --------------------------------------------------------------

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int order, const std::vector<std::pair<int, int>>& edges) {
             Graph g(order, GraphSource::raw);
             for (const auto& [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("order"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_edge_list(text); },
                  py::arg("text"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("edge_list", [](const Graph& g) { return to_edge_list(g); })
      .def("dot", [](const Graph& g) { return to_dot(g); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("build_cayley_graph",
        [](const Semigroup& s, const std::vector<int>& connection) {
          return build_cayley_graph(s, subset_for(s, connection));
        },
        py::arg("s"), py::arg("connection"));
  m.def("is_undirected", &is_undirected);
  m.def("underlying_undirected", &underlying_undirected);
  m.def("is_disjoint_union_of_completes", &is_disjoint_union_of_completes, py::arg("g"),
        py::arg("require_loops"));
  m.def("weak_component_sizes", &weak_component_sizes);
  m.def("distance_matrix", [](const Graph& g) {
    const DistanceMatrix dist = distances(g);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v)
        rows[static_cast<std::size_t>(u)].push_back(dist.raw(u, v));
    return rows;
  });

  // --- labellings ----------------------------------------------------------

  m.def("exact_span",
        [](const Graph& g, const py::object& kappa, int solver_cap) {
          return span_result_dict(exact_span(g, kappa_from(kappa), solver_cap));
        },
        py::arg("g"), py::arg("kappa"), py::arg("solver_cap") = kDefaultSolverCap);
  m.def("upper_bound_trivial", [](const Graph& g, const py::object& kappa) {
    const BoundResult bound = upper_bound_trivial(g, kappa_from(kappa));
    py::dict out;
    out["value"] = bound.value;
    out["labels"] = bound.witness.labels;
    return out;
  });
  m.def("validate_labelling",
        [](const Graph& g, const py::object& kappa, const std::vector<long long>& labels) {
          const ValidationResult result =
              validate_labelling(g, kappa_from(kappa), Labelling{labels});
          py::dict out;
          out["valid"] = result.valid;
          if (result.violation) {
            py::dict v;
            v["u"] = result.violation->u;
            v["v"] = result.violation->v;
            v["distance"] = result.violation->distance;
            v["required"] = result.violation->required;
            v["gap"] = result.violation->gap;
            out["violation"] = v;
          } else {
            out["violation"] = py::none();
          }
          return out;
        },
        py::arg("g"), py::arg("kappa"), py::arg("labels"));
  m.def("span_union_of_completes", &span_union_of_completes, py::arg("g"), py::arg("k1"));
  m.def("formula_left_zero_band", &formula_left_zero_band, py::arg("band_order"),
        py::arg("connection_order"), py::arg("k1"), py::arg("k2"));
  m.def("formula_zero_semigroup", &formula_zero_semigroup, py::arg("order_with_zero"),
        py::arg("k1"), py::arg("k2"));

  // --- verification --------------------------------------------------------

  py::class_<Counterexample>(m, "Counterexample")
      .def_readonly("semigroup", &Counterexample::semigroup)
      .def_readonly("subsemigroup", &Counterexample::subsemigroup)
      .def_readonly("connection_set", &Counterexample::connection_set)
      .def_readonly("graph", &Counterexample::graph)
      .def_readonly("kappa", &Counterexample::kappa)
      .def_readonly("expected", &Counterexample::expected)
      .def_readonly("got", &Counterexample::got)
      .def_readonly("note", &Counterexample::note);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("theorem", &VerificationReport::theorem)
      .def_readonly("universe", &VerificationReport::universe)
      .def_readonly("checked", &VerificationReport::checked)
      .def_readonly("confirmed", &VerificationReport::confirmed)
      .def_readonly("weak_checked", &VerificationReport::weak_checked)
      .def_readonly("weak_confirmed", &VerificationReport::weak_confirmed)
      .def_readonly("partial", &VerificationReport::partial)
      .def_readonly("counterexample_total", &VerificationReport::counterexample_total)
      .def_readonly("counterexamples", &VerificationReport::counterexamples)
      .def_readonly("seed", &VerificationReport::seed)
      .def_readonly("elapsed_ms", &VerificationReport::elapsed_ms)
      .def_readonly("effort", &VerificationReport::effort)
      .def("all_confirmed", &VerificationReport::all_confirmed)
      .def("to_json", &VerificationReport::to_json, py::arg("include_timing") = false)
      .def("text", &VerificationReport::text)
      .def("fields", &report_dict_fields)
      .def("__repr__", [](const VerificationReport& r) {
        return "VerificationReport(theorem=" + std::to_string(r.theorem) +
               ", checked=" + std::to_string(r.checked) +
               ", confirmed=" + std::to_string(r.confirmed) + ")";
      });

  m.def("verify_theorem1",
        [](const Semigroup& s, const std::string& grid, int solver_cap) {
          return verify_theorem1(s, grid_from(grid), solver_cap);
        },
        py::arg("s"), py::arg("grid") = "", py::arg("solver_cap") = kDefaultSolverCap);
  m.def("verify_theorem2",
        [](const Semigroup& s, const std::string& grid, int solver_cap) {
          return verify_theorem2(s, grid_from(grid), solver_cap);
        },
        py::arg("s"), py::arg("grid") = "", py::arg("solver_cap") = kDefaultSolverCap);
  m.def("verify_theorem3",
        [](const Semigroup& s, const std::vector<int>& connection, const std::string& grid,
           int solver_cap) {
          return verify_theorem3(s, subset_for(s, connection), grid_from(grid), solver_cap);
        },
        py::arg("s"), py::arg("connection"), py::arg("grid") = "",
        py::arg("solver_cap") = kDefaultSolverCap);
  m.def("verify_theorem4",
        [](const Graph& g, const std::string& grid, int solver_cap) {
          return verify_theorem4(g, grid_from(grid), solver_cap);
        },
        py::arg("g"), py::arg("grid") = "", py::arg("solver_cap") = kDefaultSolverCap);
  m.def("run_campaign",
        [](int theorem, int order_cap, const std::string& grid, std::uint64_t seed,
           bool fail_fast, int workers, long long budget_ms, int random_count,
           int exhaustive_max, int solver_cap) {
          CampaignOptions opts;
          opts.theorem = theorem;
          opts.order_cap = order_cap;
          opts.grid = grid_from(grid);
          opts.seed = seed;
          opts.fail_fast = fail_fast;
          opts.workers = workers;
          opts.budget_ms = budget_ms;
          opts.random_count = random_count;
          opts.exhaustive_max = exhaustive_max;
          opts.solver_cap = solver_cap;
          return run_campaign(opts);
        },
        py::arg("theorem"), py::arg("order_cap") = 4, py::arg("grid") = "",
        py::arg("seed") = 1, py::arg("fail_fast") = false, py::arg("workers") = 0,
        py::arg("budget_ms") = 0, py::arg("random_count") = 1000,
        py::arg("exhaustive_max") = 5, py::arg("solver_cap") = kDefaultSolverCap);
}
