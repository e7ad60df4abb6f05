// bmg: command-line front end for best match graph analysis.
//
// Exit codes: 0 success, 1 valid input with a negative answer, 2 malformed
// input. Reports are JSON on stdout; artifacts go to the files given by -o
// and friends, or to stdout when no file is given.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bmg/build.hpp"
#include "bmg/editing.hpp"
#include "bmg/error.hpp"
#include "bmg/gadgets.hpp"
#include "bmg/graph.hpp"
#include "bmg/ilp.hpp"
#include "bmg/newick.hpp"
#include "bmg/recognition.hpp"
#include "bmg/simulation.hpp"

using namespace bmg;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ColoredDigraph load_graph(const std::string& path, const std::string& colors) {
  const auto text = read_file(path);
  if (ends_with(path, ".tsv")) {
    if (colors.empty()) throw InputError("a TSV arc list needs --colors");
    return graph_from_tsv(text, parse_color_tsv(read_file(colors)));
  }
  return graph_from_json(text);
}

LeafColoredTree load_tree(const std::string& path, const std::string& colors) {
  auto t = parse_newick(read_file(path));
  if (!colors.empty()) t = with_colors(t, parse_color_tsv(read_file(colors)));
  return t;
}

Json tree_report(const LeafColoredTree& t) {
  Json j;
  j["newick"] = to_newick(t);
  j["leaves"] = t.leaf_count();
  j["binary"] = t.is_binary();
  if (t.leaf_count() > 2) j["resolution"] = resolution(t);
  return j;
}

int emit_tree(const LeafColoredTree& t, const std::string& out, const std::string& colors_out) {
  if (!out.empty()) write_file(out, to_newick(t) + "\n");
  if (!colors_out.empty()) write_file(colors_out, to_color_tsv(t));
  print(tree_report(t));
  return kOk;
}

std::vector<int> parse_ints(std::string_view s, char sep) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto end = s.find(sep, pos);
    if (end == std::string_view::npos) end = s.size();
    auto field = s.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || p != field.data() + field.size())
      throw InputError("expected an integer, got '" + std::string(field) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::vector<double> parse_doubles(std::string_view s) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    const std::string field(s.substr(pos, end - pos));
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(field, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != field.size()) throw InputError("expected a number, got '" + field + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

ClassSize parse_class(const std::string& s) {
  const auto v = parse_ints(s, ',');
  if (v.size() != 2) throw InputError("a class size is 'black,white', got '" + s + "'");
  return {v[0], v[1]};
}

Json witness_json(const ForbiddenWitness& w) {
  return Json{{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}};
}

// --- subcommands -----------------------------------------------------------

int cmd_tree2bmg(const std::string& tree, const std::string& colors, const std::string& out) {
  const auto t = with_colors(parse_newick(read_file(tree)), parse_color_tsv(read_file(colors)));
  const auto g = bmg_from_tree(t);
  if (out.empty()) {
    std::cout << to_json(g) << "\n";
  } else {
    write_file(out, to_json(g) + "\n");
    print(Json{{"vertices", g.size()}, {"arcs", g.arc_count()}, {"output", out}});
  }
  return kOk;
}

int cmd_check(const ColoredDigraph& g) {
  Json j;
  const bool proper = g.is_properly_colored();
  const bool sf = proper && is_sf_colored(g);
  j["proper"] = proper;
  j["sf"] = sf;
  bool bmg = false, be = false;
  std::optional<ForbiddenWitness> witness;
  std::vector<std::string> certificate;
  if (proper) {
    const auto rec = recognize(g);
    bmg = rec.bmg;
    if (bmg) {
      const auto ex = binary_explaining_tree(g);
      be = ex.ok();
      if (!be) {
        witness = find_hourglass(g);
        certificate = ex.certificate;
      }
    } else {
      certificate = rec.certificate;
      if (sf && g.color_count() <= 2) witness = find_f_graph(g);
    }
  }
  j["bmg"] = bmg;
  j["binary_explainable"] = be;
  if (witness) {
    j["witness_kind"] = std::string(to_string(witness->kind));
    j["witness"] = witness->vertices;
  }
  if (!certificate.empty()) j["certificate"] = certificate;
  print(j);
  return be ? kOk : kNegative;
}

int explain_failure(const NotExplainableError& e) {
  print(Json{{"error", e.reason()}, {"certificate", e.certificate()}, {"message", e.what()}});
  return kNegative;
}

int cmd_refine(const std::string& tree, const std::string& graph, const std::string& colors, bool binary,
               const std::string& out, const std::string& colors_out) {
  if (tree.empty() == graph.empty()) throw InputError("refine takes exactly one of --tree and --graph");
  if (!tree.empty()) {
    const auto t = load_tree(tree, colors);
    return emit_tree(binary ? binary_refine(t) : t, out, colors_out);
  }
  const auto ex = binary_explaining_tree(load_graph(graph, colors));
  if (!ex.ok()) {
    print(Json{{"error", std::string(to_string(ex.rejection))}, {"certificate", ex.certificate}});
    return kNegative;
  }
  return emit_tree(*ex.tree, out, colors_out);
}

int cmd_ilp(const ColoredDigraph& g, EditMode mode, const std::string& out, bool solve) {
  const auto m = build_ilp(g, mode);
  const auto text = export_lp(m);
  if (out.empty() && !solve) {
    std::cout << text;
    return kOk;
  }
  if (!out.empty()) write_file(out, text);
  Json j;
  j["mode"] = std::string(to_string(mode));
  j["variables"] = m.variables.size();
  j["arc_variables"] = m.arc_variable_count();
  j["triple_variables"] = m.triple_variable_count();
  j["constraints"] = m.constraints.size();
  Json fam = Json::object();
  for (auto f : {Family::kMode, Family::kProper, Family::kSinkFree, Family::kInformative, Family::kForbidden,
                 Family::kDense, Family::kInference})
    fam[std::string(to_string(f))] = m.count(f);
  j["families"] = fam;
  j["objective_constant"] = m.objective_constant;
  if (solve) {
    // Solve what was written, not the in-memory model.
    const auto s = solve_exhaustive(parse_lp(text));
    j["optimum"] = s ? Json(s->objective) : Json(nullptr);
    if (!s) {
      print(j);
      return kNegative;
    }
  }
  print(j);
  return kOk;
}

int cmd_edit_exact(const ColoredDigraph& g, EditMode mode, int kmax, const std::string& out) {
  const auto r = brute_force_edit(g, mode, kmax);
  Json j;
  j["mode"] = std::string(to_string(mode));
  j["kmax"] = kmax;
  if (!r) {
    j["k"] = nullptr;
    print(j);
    return kNegative;
  }
  j["k"] = r->k;
  j["edits"] = Json::parse(to_json(r->edits));
  if (!out.empty()) write_file(out, to_json(apply_edit(g, r->edits)) + "\n");
  print(j);
  return kOk;
}

int cmd_gadget_x3c(int elements, const std::string& subsets, const std::string& cover, const std::string& out,
                   const std::string& edits_out) {
  std::vector<std::array<int, 3>> cs;
  for (const auto& part : split(subsets, ';')) {
    const auto v = parse_ints(part, ',');
    if (v.size() != 3) throw InputError("each subset needs exactly 3 elements, got '" + part + "'");
    cs.push_back({v[0], v[1], v[2]});
  }
  const auto gd = x3c_gadget(elements, cs);
  Json j{{"t", gd.t}, {"m", gd.m}, {"r", gd.r}, {"q", gd.q}, {"k", gd.k}, {"vertices", gd.graph.size()},
         {"arcs", gd.graph.arc_count()}};
  if (!cover.empty()) {
    const auto f = x3c_cover_deletions(gd, parse_ints(cover, ','));
    j["deletions"] = f.size();
    j["binary_explainable_after"] = binary_explaining_tree(apply_edit(gd.graph, f)).ok();
    if (!edits_out.empty()) write_file(edits_out, to_json(f) + "\n");
  }
  if (!out.empty()) write_file(out, to_json(gd.graph) + "\n");
  else j["graph"] = Json::parse(to_json(gd.graph));
  print(j);
  return kOk;
}

int cmd_gadget_lemma(const std::string& x, const std::vector<std::string>& ys, const std::string& prefix,
                     const std::string& out, const std::string& tree_out) {
  std::vector<ClassSize> y;
  for (const auto& s : ys) y.push_back(parse_class(s));
  const auto gd = lemma_gadget(parse_class(x), y, prefix);
  Json j{{"vertices", gd.graph.size()}, {"arcs", gd.graph.arc_count()}, {"tree", to_newick(gd.tree)},
         {"binary_explainable", binary_explaining_tree(gd.graph).ok()}};
  if (!tree_out.empty()) write_file(tree_out, to_newick(gd.tree) + "\n");
  if (!out.empty()) write_file(out, to_json(gd.graph) + "\n");
  else j["graph"] = Json::parse(to_json(gd.graph));
  print(j);
  return kOk;
}

int cmd_simulate(const std::string& species, const std::string& rates, int replicates, std::uint64_t seed,
                 const std::string& out, const std::string& gnuplot, const std::string& png) {
  ExperimentConfig cfg;
  const auto dots = species.find("..");
  if (dots != std::string::npos) {
    cfg.min_species = parse_ints(species.substr(0, dots), ',').at(0);
    cfg.max_species = parse_ints(species.substr(dots + 2), ',').at(0);
  } else {
    cfg.min_species = cfg.max_species = parse_ints(species, ',').at(0);
  }
  for (const auto& part : split(rates, ';')) {
    const auto v = parse_doubles(part);
    if (v.size() != 3) throw InputError("a rate triple is 'dup,loss,hgt', got '" + part + "'");
    cfg.grid.push_back({v[0], v[1], v[2]});
  }
  cfg.replicates = replicates;
  cfg.seed = seed;
  const auto rows = run_experiment(cfg);
  const auto sums = summarize_by_rate(rows);
  if (!gnuplot.empty()) write_file(gnuplot, gnuplot_script(sums, png));
  if (out.empty()) {
    std::cout << to_csv(rows);
    return kOk;
  }
  write_file(out, to_csv(rows));
  Json j{{"rows", rows.size()}, {"seed", seed}, {"output", out}};
  Json per = Json::array();
  for (const auto& s : sums) {
    per.push_back(Json{{"rates", {s.rates.dup, s.rates.loss, s.rates.hgt}},
                       {"res_lrt_median", s.res_lrt.median},
                       {"res_brt_median", s.res_brt.median},
                       {"ratio_median", s.ratio.count ? Json(s.ratio.median) : Json(nullptr)},
                       {"ratio_count", s.ratio.count}});
  }
  j["summaries"] = per;
  print(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best match graphs: recognition, least resolved and binary-refinable trees, editing models, "
               "gadgets and simulation"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string tree, colors, graph, out, colors_out, mode_name = "edit";

  auto* t2b = app.add_subcommand("tree2bmg", "Best match graph of a leaf-colored tree");
  t2b->add_option("--tree", tree, "Newick file")->required();
  t2b->add_option("--colors", colors, "leaf<TAB>color file")->required();
  t2b->add_option("-o,--output", out, "graph JSON output (default stdout)");
  t2b->callback([&] { run = [&] { return cmd_tree2bmg(tree, colors, out); }; });

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", graph, "graph JSON, or a .tsv arc list with --colors")->required();
    sub->add_option("--colors", colors, "vertex<TAB>color file for .tsv graphs");
  };

  auto* check = app.add_subcommand("check", "Report proper coloring, sink-freeness, BMG and binary explainability");
  add_graph(check);
  check->callback([&] { run = [&] { return cmd_check(load_graph(graph, colors)); }; });

  auto add_tree_out = [&](CLI::App* sub) {
    sub->add_option("-o,--output", out, "Newick output file");
    sub->add_option("--colors-out", colors_out, "leaf<TAB>color output file");
  };
  auto* lrt_cmd = app.add_subcommand("lrt", "Least resolved tree of a BMG");
  add_graph(lrt_cmd);
  add_tree_out(lrt_cmd);
  lrt_cmd->callback([&] {
    run = [&] {
      try {
        return emit_tree(lrt(load_graph(graph, colors)), out, colors_out);
      } catch (const NotExplainableError& e) {
        return explain_failure(e);
      }
    };
  });
  auto* brt_cmd = app.add_subcommand("brt", "Binary-refinable tree of a binary-explainable BMG");
  add_graph(brt_cmd);
  add_tree_out(brt_cmd);
  brt_cmd->callback([&] {
    run = [&] {
      try {
        return emit_tree(brt(load_graph(graph, colors)), out, colors_out);
      } catch (const NotExplainableError& e) {
        return explain_failure(e);
      }
    };
  });

  bool binary = false;
  auto* refine = app.add_subcommand("refine", "Binary refinement of a tree, or a binary tree explaining a graph");
  refine->add_option("--tree", tree, "Newick file");
  refine->add_option("--graph", graph, "graph JSON (runs the binary explanation)");
  refine->add_option("--colors", colors, "leaf<TAB>color file");
  refine->add_flag("--binary", binary, "resolve every multifurcation as a caterpillar");
  add_tree_out(refine);
  refine->callback([&] { run = [&] { return cmd_refine(tree, graph, colors, binary, out, colors_out); }; });

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode_name, "edit | delete | complete")
        ->check(CLI::IsMember({"edit", "delete", "complete"}));
  };
  bool solve = false;
  auto* ilp = app.add_subcommand("ilp", "Export the 0/1 program for editing to a binary-explainable BMG");
  add_graph(ilp);
  add_mode(ilp);
  ilp->add_option("-o,--output", out, "LP output file (default stdout)");
  ilp->add_flag("--solve", solve, "re-read the exported model and solve it exhaustively (small graphs)");
  ilp->callback([&] {
    run = [&] { return cmd_ilp(load_graph(graph, colors), parse_edit_mode(mode_name), out, solve); };
  });

  int kmax = 4;
  auto* edit = app.add_subcommand("edit-exact", "Minimum arc modification by exhaustive search");
  add_graph(edit);
  add_mode(edit);
  edit->add_option("--kmax", kmax, "largest modification count tried")->check(CLI::NonNegativeNumber);
  edit->add_option("-o,--output", out, "edited graph JSON");
  edit->callback([&] {
    run = [&] { return cmd_edit_exact(load_graph(graph, colors), parse_edit_mode(mode_name), kmax, out); };
  });

  auto* gadget = app.add_subcommand("gadget", "Hardness-reduction gadgets");
  gadget->require_subcommand(1);
  int elements = 3;
  std::string subsets, cover, edits_out;
  auto* x3c = gadget->add_subcommand("x3c", "Editing instance from exact cover by 3-sets");
  x3c->add_option("--elements", elements, "number of elements (multiple of 3)")->required();
  x3c->add_option("--subsets", subsets, "subsets as 'a,b,c;d,e,f;...'")->required();
  x3c->add_option("--cover", cover, "exact cover as subset indices 'i,j,...' (0-based)");
  x3c->add_option("--edits-out", edits_out, "deletion set JSON for --cover");
  x3c->add_option("-o,--output", out, "graph JSON output");
  x3c->callback([&] { run = [&] { return cmd_gadget_x3c(elements, subsets, cover, out, edits_out); }; });
  std::string xclass = "1,1", prefix, tree_out;
  std::vector<std::string> yclasses;
  auto* lemma = gadget->add_subcommand("lemma", "Binary-explainable two-colored component");
  lemma->add_option("--x", xclass, "X class as 'black,white'");
  lemma->add_option("--y", yclasses, "Y class as 'black,white' (repeat for Y1, Y2, ...)")->required();
  lemma->add_option("--prefix", prefix, "id prefix");
  lemma->add_option("--tree-out", tree_out, "Newick of the explaining tree");
  lemma->add_option("-o,--output", out, "graph JSON output");
  lemma->callback([&] { run = [&] { return cmd_gadget_lemma(xclass, yclasses, prefix, out, tree_out); }; });

  std::string species = "10..30", rates = "1,1,0.2", gnuplot, png = "resolution.png";
  int replicates = 1;
  std::uint64_t seed = 0;
  auto* sim = app.add_subcommand("simulate", "Simulated scenarios and LRT/BRT resolution");
  sim->add_option("--species", species, "species count 'A..B' or 'N'");
  sim->add_option("--rates", rates, "rate triples 'dup,loss,hgt;...'");
  sim->add_option("--replicates", replicates, "replicates per rate triple")->check(CLI::PositiveNumber);
  sim->add_option("--seed", seed, "master seed");
  sim->add_option("-o,--output", out, "CSV output (default stdout)");
  sim->add_option("--gnuplot", gnuplot, "write a gnuplot script with box summaries");
  sim->add_option("--png", png, "image file named in the gnuplot script");
  sim->callback([&] { run = [&] { return cmd_simulate(species, rates, replicates, seed, out, gnuplot, png); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }
  try {
    return run();
  } catch (const InputError& e) {
    print(Json{{"error", "input"}, {"message", e.what()}});
    std::cerr << "bmg: " << e.what() << "\n";
    return kBadInput;
  } catch (const NotExplainableError& e) {
    return explain_failure(e);
  } catch (const SimulationError& e) {
    print(Json{{"error", "simulation"}, {"message", e.what()}});
    std::cerr << "bmg: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    print(Json{{"error", "input"}, {"message", e.what()}});
    std::cerr << "bmg: " << e.what() << "\n";
    return kBadInput;
  }
}
