#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "wreath/errors.hpp"
#include "wreath/harness.hpp"
#include "wreath/io.hpp"
#include "wreath/products.hpp"

using namespace wreath;

namespace {

enum Exit { kOk = 0, kComputation = 1, kDisagreement = 2, kParse = 3 };

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("bad JSON in '") + path + "': " + e.what());
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Json group_summary(const PermGroup& g) {
  Json j = group_to_json(g);
  j["order"] = g.order();
  Json orb = Json::array();
  for (const auto& c : orbits(g).classes) orb.push_back(c);
  j["orbits"] = orb;
  j["transitive"] = g.is_transitive();
  return j;
}

std::string kind_of(const Json& j) {
  if (j.contains("kind")) return j["kind"].get<std::string>();
  if (j.contains("degree")) return "group";
  if (j.contains("colors") && j["colors"].is_object()) return "hypergraph";
  if (j.contains("n") && j.contains("colors") && j["colors"].is_array()) {
    const auto n = j["n"].get<std::size_t>();
    return j["colors"].size() == n * n ? "digraph" : "graph";
  }
  throw ParseError("cannot tell which structure this JSON describes");
}

// Transitive subgroups of S_n generated by at most two elements, one per
// conjugacy class, skipping classes of the groups in `known`.
std::vector<NamedGroup> small_transitive_groups(std::size_t n, const Limits& limits,
                                                const std::vector<NamedGroup>& known) {
  std::vector<Permutation> all;
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  do all.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));

  const auto canonical = [&](const std::vector<Permutation>& elems) {
    std::vector<Permutation> best;
    for (const Permutation& s : all) {
      const Permutation si = inverse(s);
      std::vector<Permutation> conj;
      conj.reserve(elems.size());
      for (const Permutation& e : elems) conj.push_back(si * e * s);
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best) best = std::move(conj);
    }
    return best;
  };

  std::set<std::vector<Permutation>> seen_sets, seen_classes;
  for (const auto& k : known)
    if (k.group.degree() == n) seen_classes.insert(canonical(k.group.elements()));
  std::vector<NamedGroup> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      std::vector<Permutation> gens{all[i]};
      if (j != i) gens.push_back(all[j]);
      PermGroup g = generate_group(n, gens, limits);
      if (!g.is_transitive()) continue;
      if (!seen_sets.insert(g.elements()).second) continue;
      if (!seen_classes.insert(canonical(g.elements())).second) continue;
      std::string spec = "perm(" + std::to_string(n) + ";";
      const auto& used = g.generators();
      for (std::size_t k = 0; k < used.size(); ++k)
        spec += (k ? ", " : " ") + used[k].to_string();
      if (used.empty()) spec += " ()";
      spec += ")";
      out.push_back({spec, g});
    }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wreath products, orbital graphs and closure classes of permutation groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Limits limits;
  std::uint64_t timeout_ms = static_cast<std::uint64_t>(limits.timeout.count());
  app.add_option("--order-cap", limits.order_cap, "Largest group enumerated element by element")
      ->capture_default_str();
  app.add_option("--point-cap", limits.point_cap, "Largest point set a product may create")
      ->capture_default_str();
  app.add_option("--graph-cap", limits.graph_cap, "Largest graph given to the automorphism search")
      ->capture_default_str();
  app.add_option("--hypergraph-cap", limits.hypergraph_cap, "Largest hypergraph vertex count")
      ->capture_default_str();
  app.add_option("--timeout-ms", timeout_ms, "Time budget per search, 0 for none")
      ->capture_default_str();

  std::string spec, spec_b, kind = "gr", action = "imprimitive", file_a, file_b, output,
                            format = "json", what = "group", suite = "paper",
                            scan_class = "dgr-not-bgr";
  bool as_json = false, timings = false, free = false;
  unsigned threads = 0;
  std::size_t max_degree = 5;

  auto* group = app.add_subcommand("group", "Show a group: generators, order, orbits, orbitals");
  group->add_option("spec", spec, "Group spec, e.g. wr(S2,C3)")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Membership in GR, DGR, BGR, DGR+");
  classify_cmd->add_option("spec", spec)->required();

  auto* closure_cmd = app.add_subcommand("closure", "Closure of a group");
  closure_cmd->add_option("--kind", kind)->check(CLI::IsMember({"gr", "dgr", "bgr"}))
      ->capture_default_str();
  closure_cmd->add_option("spec", spec)->required();

  auto* wreath_cmd = app.add_subcommand("wreath", "Wreath product of two groups");
  wreath_cmd->add_option("--action", action)
      ->check(CLI::IsMember({"imprimitive", "product"}))
      ->capture_default_str();
  wreath_cmd->add_option("a", spec)->required();
  wreath_cmd->add_option("b", spec_b)->required();

  auto* aut = app.add_subcommand("aut", "Automorphism group of a colored structure (JSON file)");
  aut->add_option("file", file_a)->required()->check(CLI::ExistingFile);

  auto* compose = app.add_subcommand("compose", "Composition G o H of two colored graphs");
  compose->add_flag("--free", free, "Free composition (orbit-refined)");
  compose->add_option("base", file_a, "Graph G on W (JSON)")->required()->check(CLI::ExistingFile);
  compose->add_option("fibre", file_b, "Graph H on V (JSON)")->required()->check(CLI::ExistingFile);
  compose->add_option("-o,--output", output);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->capture_default_str();
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_flag("--timings", timings, "Include per-outcome milliseconds");
  verify->add_option("--threads", threads, "Worker threads, 0 = all cores");

  auto* exp = app.add_subcommand("export", "Write a group or one of its orbital structures");
  exp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  exp->add_option("--what", what)
      ->check(CLI::IsMember({"group", "orbital-graph", "orbital-digraph", "orbit-hypergraph"}))
      ->capture_default_str();
  exp->add_option("spec", spec)->required();
  exp->add_option("-o,--output", output);

  auto* scan = app.add_subcommand("scan", "Flag catalog and small transitive groups");
  scan->add_option("--max-degree", max_degree)->capture_default_str();
  scan->add_option("--class", scan_class)
      ->check(CLI::IsMember(
          {"dgr-not-bgr", "dgr-no-transposer", "bgr-not-uncolored", "not-gr", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  limits.timeout = std::chrono::milliseconds(timeout_ms);

  try {
    if (*group) {
      const PermGroup g = parse_group_spec(spec, limits);
      Json j = group_summary(g);
      j["orbitals"] = orbital_report_json(g, limits);
      std::cout << j.dump(2) << "\n";
    } else if (*classify_cmd) {
      const PermGroup g = parse_group_spec(spec, limits);
      Json j{{"spec", spec}};
      j.update(class_report_json(classify(g, limits)));
      std::cout << j.dump(2) << "\n";
    } else if (*closure_cmd) {
      const PermGroup g = parse_group_spec(spec, limits);
      const ClosureKind k = kind == "gr" ? ClosureKind::gr
                            : kind == "dgr" ? ClosureKind::dgr
                                            : ClosureKind::bgr;
      const PermGroup c = closure(g, k, limits);
      Json j = group_summary(c);
      j["kind"] = kind;
      j["closed"] = c.order() == g.order();
      std::cout << j.dump(2) << "\n";
    } else if (*wreath_cmd) {
      const PermGroup a = parse_group_spec(spec, limits), b = parse_group_spec(spec_b, limits);
      const PermGroup w =
          action == "product" ? wreath_product_action(a, b) : wreath_imprimitive(a, b);
      std::cout << group_summary(w).dump(2) << "\n";
    } else if (*aut) {
      const Json j = read_json(file_a);
      const std::string k = kind_of(j);
      PermGroup g = k == "graph"     ? automorphism_group(graph_from_json(j), limits)
                    : k == "digraph" ? automorphism_group(digraph_from_json(j), limits)
                    : k == "hypergraph"
                        ? automorphism_group(hypergraph_from_json(j), limits)
                        : throw ParseError("aut expects a graph, digraph or hypergraph");
      std::cout << group_summary(g).dump(2) << "\n";
    } else if (*compose) {
      const ColoredGraph g = graph_from_json(read_json(file_a));
      const ColoredGraph h = graph_from_json(read_json(file_b));
      const ColoredGraph c = free ? free_composition(g, h, limits) : composition(g, h);
      write_out(output, graph_to_json(c).dump() + "\n");
    } else if (*verify) {
      SuiteOptions options;
      options.limits = limits;
      options.threads = threads;
      const SuiteReport r = run_suite(suite, options);
      if (as_json) {
        std::cout << suite_report_json(r, timings).dump(2) << "\n";
      } else {
        for (const auto& o : r.outcomes) {
          std::string inputs;
          for (const auto& s : o.inputs) inputs += (inputs.empty() ? "" : " ") + s;
          std::cout << (o.agree ? "ok   " : "FAIL ") << o.claim << " [" << inputs
                    << "] predicted=" << o.predicted << " observed=" << o.observed;
          if (!o.agree && !o.note.empty()) std::cout << "  (" << o.note << ")";
          std::cout << "\n";
        }
        std::cout << "\n";
        for (const auto& [claim, c] : r.counts)
          std::cout << claim << ": " << c.agreed << "/" << c.total << "\n";
        std::cout << (r.passed() ? "all outcomes agree" : "disagreements present") << "\n";
      }
      return r.passed() ? kOk : kDisagreement;
    } else if (*exp) {
      const PermGroup g = parse_group_spec(spec, limits);
      std::string text;
      if (what == "group") {
        if (format == "dot") throw ParseError("groups export as json only");
        text = group_to_json(g).dump() + "\n";
      } else if (what == "orbital-graph") {
        const ColoredGraph s = orbital_graph(g);
        text = format == "dot" ? graph_to_dot(s) : graph_to_json(s).dump() + "\n";
      } else if (what == "orbital-digraph") {
        const ColoredDigraph s = orbital_digraph(g);
        text = format == "dot" ? digraph_to_dot(s) : digraph_to_json(s).dump() + "\n";
      } else {
        if (format == "dot") throw ParseError("hypergraphs export as json only");
        text = hypergraph_to_json(orbit_hypergraph(g)).dump() + "\n";
      }
      write_out(output, text);
    } else if (*scan) {
      std::vector<NamedGroup> groups;
      for (const auto& name : catalog_names(max_degree)) groups.push_back(named(name, limits));
      for (std::size_t n = 3; n <= std::min<std::size_t>(max_degree, 5); ++n)
        for (auto& g : small_transitive_groups(n, limits, groups)) groups.push_back(std::move(g));
      std::stable_sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
        return std::pair(x.group.degree(), x.group.order()) <
               std::pair(y.group.degree(), y.group.order());
      });
      for (const auto& g : groups) {
        const ClassReport r = classify(g.group, limits);
        std::optional<bool> uncolored;
        if ((scan_class == "bgr-not-uncolored" || scan_class == "all") && r.in_bgr.value_or(false)) {
          try {
            uncolored = uncolored_hypergraph_representable(g.group, limits).has_value();
          } catch (const CapExceeded&) {
          }
        }
        const bool bgr = r.in_bgr.value_or(true);
        const bool hit = scan_class == "all" ||
                         (scan_class == "dgr-not-bgr" && r.in_dgr && !bgr) ||
                         (scan_class == "dgr-no-transposer" && r.in_dgr && !r.transposer) ||
                         (scan_class == "bgr-not-uncolored" && uncolored == false) ||
                         (scan_class == "not-gr" && !r.in_gr);
        if (!hit) continue;
        std::cout << g.spec << "  degree=" << g.group.degree() << " order=" << r.order
                  << " transitive=" << g.group.is_transitive() << " gr=" << r.in_gr
                  << " dgr=" << r.in_dgr << " bgr="
                  << (r.in_bgr ? std::to_string(*r.in_bgr) : std::string("n/a"))
                  << " dgr_plus=" << r.in_dgr_plus
                  << " transposable=" << r.transposer.has_value();
        if (uncolored) std::cout << " uncolored=" << *uncolored;
        std::cout << "\n";
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
