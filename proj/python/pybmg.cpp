#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bmg/build.hpp"
#include "bmg/editing.hpp"
#include "bmg/error.hpp"
#include "bmg/gadgets.hpp"
#include "bmg/graph.hpp"
#include "bmg/ilp.hpp"
#include "bmg/newick.hpp"
#include "bmg/recognition.hpp"
#include "bmg/simulation.hpp"

namespace py = pybind11;
using namespace bmg;

namespace {

ColoredDigraph make_graph(const std::vector<std::pair<std::string, std::string>>& vertices,
                          const std::vector<std::pair<std::string, std::string>>& arcs) {
  std::vector<Vertex> vs;
  for (const auto& [id, color] : vertices) vs.push_back({id, color});
  return ColoredDigraph(std::move(vs), std::span<const Arc>(arcs));
}

LeafColoredTree colored_tree(const std::string& newick, const std::map<std::string, std::string>& colors) {
  ColorMap cm(colors.begin(), colors.end());
  return with_colors(parse_newick(newick), cm);
}

py::dict model_dict(const IlpModel& m) {
  py::list rows;
  for (const auto& c : m.constraints) {
    py::list terms;
    for (const auto& t : c.terms) terms.append(py::make_tuple(t.var, t.coef));
    const char* sense = c.sense == Sense::kLe ? "<=" : c.sense == Sense::kGe ? ">=" : "=";
    rows.append(py::make_tuple(c.name, terms, sense, c.rhs));
  }
  py::list obj;
  for (const auto& t : m.objective) obj.append(py::make_tuple(t.var, t.coef));
  py::dict d;
  d["variables"] = m.variables;
  d["objective_constant"] = m.objective_constant;
  d["objective"] = obj;
  d["constraints"] = rows;
  return d;
}

}  // namespace

PYBIND11_MODULE(pybmg, m) {
  m.doc() = "Best match graphs: recognition, LRT/BRT construction, editing models and simulation";

  static py::exception<NotExplainableError> not_explainable(m, "NotExplainableError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const NotExplainableError& e) {
      py::object exc = not_explainable;
      py::object value = exc(e.what());
      value.attr("reason") = e.reason();
      value.attr("certificate") = e.certificate();
      PyErr_SetObject(not_explainable.ptr(), value.ptr());
    }
  });

  py::class_<ColoredDigraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("arcs"),
           "vertices: [(id, color)], arcs: [(source, target)]")
      .def_static("from_json", [](const std::string& s) { return graph_from_json(s); })
      .def("to_json", [](const ColoredDigraph& g) { return to_json(g); })
      .def_property_readonly("ids", &ColoredDigraph::ids)
      .def_property_readonly("colors", [](const ColoredDigraph& g) {
        std::vector<std::string> out;
        for (int v = 0; v < g.size(); ++v) out.push_back(g.color(v));
        return out;
      })
      .def_property_readonly("arcs", &ColoredDigraph::arcs)
      .def("has_arc", [](const ColoredDigraph& g, const std::string& u, const std::string& v) {
        return g.has_arc(g.vertex(u), g.vertex(v));
      })
      .def("__len__", &ColoredDigraph::size)
      .def("__eq__", [](const ColoredDigraph& a, const ColoredDigraph& b) { return a == b; });

  m.def("tree_to_bmg", [](const std::string& newick, const std::map<std::string, std::string>& colors) {
    return bmg_from_tree(colored_tree(newick, colors));
  }, py::arg("newick"), py::arg("colors"));

  m.def("is_bmg", &is_bmg);
  m.def("is_sf_colored", &is_sf_colored);
  m.def("lrt", [](const ColoredDigraph& g) { return to_newick(lrt(g)); }, "Newick of the least resolved tree");
  m.def("brt", [](const ColoredDigraph& g) { return to_newick(brt(g)); }, "Newick of the binary-refinable tree");
  m.def("binary_explaining_tree", [](const ColoredDigraph& g) {
    const auto ex = binary_explaining_tree(g);
    py::dict d;
    d["tree"] = ex.tree ? py::cast(to_newick(*ex.tree)) : py::none();
    d["rejection"] = std::string(to_string(ex.rejection));
    d["certificate"] = ex.certificate;
    return d;
  });
  m.def("find_hourglass", [](const ColoredDigraph& g) -> std::optional<std::vector<std::string>> {
    if (auto w = find_hourglass(g)) return w->vertices;
    return std::nullopt;
  });
  m.def("resolution", [](const std::string& newick) { return resolution(parse_newick(newick)); });
  m.def("binary_refine", [](const std::string& newick) { return to_newick(binary_refine(parse_newick(newick))); });

  m.def("ilp_model", [](const ColoredDigraph& g, const std::string& mode) {
    return model_dict(build_ilp(g, parse_edit_mode(mode)));
  }, py::arg("graph"), py::arg("mode") = "edit",
        "Variables, objective and constraints as plain lists; terms are (variable index, coefficient).");
  m.def("export_lp", [](const ColoredDigraph& g, const std::string& mode) {
    return export_lp(build_ilp(g, parse_edit_mode(mode)));
  }, py::arg("graph"), py::arg("mode") = "edit");
  m.def("solve_lp", [](const std::string& text) -> std::optional<int> {
    if (auto s = solve_exhaustive(parse_lp(text))) return s->objective;
    return std::nullopt;
  }, "Optimum of an LP text by the internal exhaustive checker, None if infeasible");
  m.def("brute_force_edit", [](const ColoredDigraph& g, const std::string& mode, int kmax) -> py::object {
    const auto r = brute_force_edit(g, parse_edit_mode(mode), kmax);
    if (!r) return py::none();
    py::dict d;
    d["k"] = r->k;
    d["insert"] = r->edits.insert;
    d["delete"] = r->edits.remove;
    return d;
  }, py::arg("graph"), py::arg("mode") = "edit", py::arg("kmax") = 4);

  m.def("x3c_gadget", [](int elements, const std::vector<std::array<int, 3>>& subsets) {
    const auto gd = x3c_gadget(elements, subsets);
    py::dict d;
    d["k"] = gd.k;
    d["r"] = gd.r;
    d["q"] = gd.q;
    d["vertices"] = gd.graph.size();
    d["arcs"] = gd.graph.arc_count();
    return d;
  });

  m.def("simulate", [](int min_species, int max_species, const std::vector<std::array<double, 3>>& rates,
                       int replicates, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.min_species = min_species;
    cfg.max_species = max_species;
    for (const auto& r : rates) cfg.grid.push_back({r[0], r[1], r[2]});
    cfg.replicates = replicates;
    cfg.seed = seed;
    return to_csv(run_experiment(cfg));
  }, py::arg("min_species"), py::arg("max_species"), py::arg("rates"), py::arg("replicates") = 1,
        py::arg("seed") = 0, "CSV text, one row per replicate");
}
