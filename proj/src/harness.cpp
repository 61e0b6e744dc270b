#include "wreath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "wreath/errors.hpp"
#include "wreath/orbits.hpp"
#include "wreath/products.hpp"

namespace wreath {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationOutcome outcome(std::string claim, std::vector<std::string> inputs, bool predicted,
                            bool observed) {
  VerificationOutcome o;
  o.claim = std::move(claim);
  o.inputs = std::move(inputs);
  o.predicted = predicted;
  o.observed = observed;
  o.agree = predicted == observed;
  return o;
}

void add_witness(VerificationOutcome& o, const Verdict& v) {
  if (!v.witness) return;
  o.witnesses.push_back(v.witness->to_string());
  if (!v.witness_verified) o.note += "witness failed re-verification; ";
}

std::uint64_t max_color_plus_one(const ColoredGraph& g) {
  Color top = 0;
  for (Color c : g.upper()) top = std::max(top, c);
  return std::uint64_t{top} + 1;
}

bool same_elements(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.elements() == b.elements();
}

// Elements of a closure, or just its generators when it is too large.
std::vector<Permutation> sample(const PermGroup& g, bool& complete) {
  complete = g.order() <= g.limits().order_cap;
  return complete ? g.elements() : g.generators();
}

}  // namespace

NamedGroup named(std::string spec, const Limits& limits) {
  PermGroup g = parse_group_spec(spec, limits);
  return {std::move(spec), std::move(g)};
}

Harness::Harness(Limits limits, Hooks hooks) : limits_(limits), hooks_(std::move(hooks)) {
  if (!hooks_.orbital_graph)
    hooks_.orbital_graph = [](const PermGroup& g) { return orbital_graph(g); };
}

ColoredGraph Harness::graph_of(const PermGroup& g) const { return hooks_.orbital_graph(g); }

Profile Harness::profile(const NamedGroup& g) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = profiles_.find(g.spec); it != profiles_.end()) return it->second;
  }
  const ClassReport r = classify(g.group, limits_);
  const OrbitalData d = orbitals(g.group);
  Profile p;
  p.gr = r.in_gr;
  p.dgr = r.in_dgr;
  p.bgr = r.in_bgr;
  p.dgr_plus = r.in_dgr_plus;
  p.i2 = r.is_i2;
  p.transitive = g.group.is_transitive();
  p.symmetric = is_symmetric(g.group);
  p.alternating = is_alternating(g.group);
  p.degree = g.group.degree();
  p.rank = d.rank;
  p.nsp = d.nsp;
  p.orbit_count = orbits(g.group).size();
  p.transposable = r.transposer.has_value();
  std::lock_guard lock(mutex_);
  profiles_.emplace(g.spec, p);
  return p;
}

Verdict Harness::observe(const PermGroup& g, ClosureKind kind) const {
  Verdict v;
  std::function<bool(const Permutation&)> keeps;
  std::optional<PermGroup> clo;
  switch (kind) {
    case ClosureKind::gr: {
      auto s = std::make_shared<ColoredGraph>(graph_of(g));
      clo = automorphism_group(*s, limits_);
      keeps = [s](const Permutation& p) { return preserves(*s, p); };
      break;
    }
    case ClosureKind::dgr: {
      auto s = std::make_shared<ColoredDigraph>(orbital_digraph(g));
      clo = automorphism_group(*s, limits_);
      keeps = [s](const Permutation& p) { return preserves(*s, p); };
      break;
    }
    case ClosureKind::bgr: {
      auto s = std::make_shared<ColoredHypergraph>(orbit_hypergraph(g));
      clo = automorphism_group(*s, limits_);
      keeps = [s](const Permutation& p) { return preserves(*s, p); };
      break;
    }
  }
  v.closure_order = clo->order();
  v.member = *clo == g;
  if (!v.member)
    for (const Permutation& p : clo->generators())
      if (!g.contains(p)) {
        v.witness = p;
        v.witness_verified = keeps(p) && !g.contains(p);
        break;
      }
  return v;
}

VerificationOutcome Harness::verify_imprimitive_classification(const NamedGroup& a,
                                                               const NamedGroup& b) {
  const auto start = Clock::now();
  const Profile pa = profile(a), pb = profile(b);
  const bool a_ok = pa.gr || pa.i2, b_ok = pb.gr || pb.i2;
  const bool predicted = a_ok && (b_ok || (pb.dgr && !pa.transitive));
  const Verdict v = observe(wreath_imprimitive(a.group, b.group), ClosureKind::gr);
  auto o = outcome("imprimitive-gr-classification", {a.spec, b.spec}, predicted, v.member);
  add_witness(o, v);
  o.ms = elapsed_ms(start);
  return o;
}

VerificationOutcome Harness::verify_digraph_classification(const NamedGroup& a,
                                                           const NamedGroup& b) {
  const auto start = Clock::now();
  const Profile pa = profile(a), pb = profile(b);
  const Verdict v = observe(wreath_imprimitive(a.group, b.group), ClosureKind::dgr);
  auto o = outcome("imprimitive-dgr-classification", {a.spec, b.spec}, pa.dgr && pb.dgr,
                   v.member);
  add_witness(o, v);
  o.ms = elapsed_ms(start);
  return o;
}

VerificationOutcome Harness::verify_orbital_factorization(const NamedGroup& a,
                                                          const NamedGroup& b) {
  const auto start = Clock::now();
  const ColoredGraph whole = graph_of(wreath_imprimitive(a.group, b.group));
  const ColoredGraph gb = orbital_graph(b.group), ga = orbital_graph(a.group);
  const bool observed =
      color_equivalent(whole, free_composition(gb, ga, orbits(b.group), orbits(a.group)));
  auto o = outcome("orbital-factorization", {a.spec, b.spec}, true, observed);
  const bool literal = color_equivalent(whole, free_composition(gb, ga, limits_));
  o.note = std::string("with orbits of Aut(G*(B)), Aut(G*(A)): ") +
           (literal ? "equivalent" : "differs");
  o.ms = elapsed_ms(start);
  return o;
}

VerificationOutcome Harness::verify_parallel_multiple_law(const NamedGroup& b, std::size_t t) {
  const auto start = Clock::now();
  const Profile pb = profile(b);
  const Verdict v = observe(parallel_multiple(b.group, t), ClosureKind::gr);
  auto o = outcome("parallel-multiple-law", {b.spec, std::to_string(t)}, pb.dgr, v.member);
  add_witness(o, v);
  o.ms = elapsed_ms(start);
  return o;
}

std::pair<std::optional<ColoredGraph>, VerificationOutcome> Harness::build_lemma_A_graph(
    const NamedGroup& a, const NamedGroup& b) {
  const auto start = Clock::now();
  const std::vector<std::string> inputs{a.spec, b.spec};
  const PermGroup wr = wreath_imprimitive(a.group, b.group);
  if (is_i2(b.group) || !observe(wr, ClosureKind::gr).member) {
    auto o = outcome("collapsed-graph-construction", inputs, false, false);
    o.note = "hypothesis not met (needs B != I2 and A wr B in GR)";
    o.ms = elapsed_ms(start);
    return {std::nullopt, o};
  }
  const ColoredGraph g = graph_of(wr);
  const OrbitPartition oa = orbits(a.group), ob = orbits(b.group);
  const std::size_t nw = b.group.degree(), t = oa.size();
  const std::uint64_t k = max_color_plus_one(g);
  const ColoredGraph collapsed = ColoredGraph::from_function(nw * t, [&](Point x, Point y) {
    const Point w1 = x % nw, w2 = y % nw;
    const std::size_t i = x / nw, j = y / nw;
    if (w1 != w2) return g.color(oa.classes[i][0] * nw + w1, oa.classes[j][0] * nw + w2);
    const std::uint64_t r = ob.class_of[w1];
    return static_cast<Color>(r * t * t + std::min(i, j) * t + std::max(i, j) + k);
  });
  const PermGroup aut = automorphism_group(collapsed, limits_);
  const bool equal = same_elements(aut, parallel_multiple(b.group, t));
  auto o = outcome("collapsed-graph-construction", inputs, true, equal);
  o.note = std::to_string(nw * t) + " vertices, |Aut| = " + std::to_string(aut.order());
  o.ms = elapsed_ms(start);
  return {collapsed, o};
}

std::pair<std::optional<ColoredGraph>, VerificationOutcome> Harness::build_lemma_C_graph(
    const NamedGroup& a, const NamedGroup& b) {
  const auto start = Clock::now();
  const std::vector<std::string> inputs{a.spec, b.spec};
  const OrbitPartition oa = orbits(a.group), ob = orbits(b.group);
  const std::size_t nv = a.group.degree(), nw = b.group.degree(), t = oa.size();
  const PermGroup par = parallel_multiple(b.group, t);
  if (!profile(a).gr || t < 2 || !observe(par, ClosureKind::gr).member) {
    auto o = outcome("fibre-graph-construction", inputs, false, false);
    o.note = "hypothesis not met (needs A in GR, t >= 2, B x I_t in GR)";
    o.ms = elapsed_ms(start);
    return {std::nullopt, o};
  }
  const ColoredGraph g1 = orbital_graph(par), g2 = orbital_graph(a.group);
  const std::uint64_t k = std::max(max_color_plus_one(g1), max_color_plus_one(g2));
  const ColoredGraph g = ColoredGraph::from_function(nv * nw, [&](Point x, Point y) {
    const Point v1 = x / nw, v2 = y / nw, w1 = x % nw, w2 = y % nw;
    if (w1 != w2)
      return g1.color(static_cast<Point>(oa.class_of[v1] * nw + w1),
                      static_cast<Point>(oa.class_of[v2] * nw + w2));
    // Orbit indices of B count from 1 so the shifted block clears g1's colors.
    const std::uint64_t r = ob.class_of[w1] + 1;
    return static_cast<Color>(g2.color(v1, v2) + k * r);
  });
  const PermGroup aut = automorphism_group(g, limits_);
  const bool equal = same_elements(aut, wreath_imprimitive(a.group, b.group));
  auto o = outcome("fibre-graph-construction", inputs, true, equal);
  o.note = std::to_string(nv * nw) + " vertices, |Aut| = " + std::to_string(aut.order());
  o.ms = elapsed_ms(start);
  return {g, o};
}

VerificationOutcome Harness::verify_transitive_decomposition(const NamedGroup& a,
                                                             const NamedGroup& b) {
  const auto start = Clock::now();
  const std::vector<std::string> inputs{a.spec, b.spec};
  const PermGroup wr = wreath_imprimitive(a.group, b.group);
  if (!a.group.is_transitive() || !b.group.is_transitive() ||
      !observe(wr, ClosureKind::gr).member) {
    auto o = outcome("transitive-composition-decomposition", inputs, false, false);
    o.note = "hypothesis not met (needs A, B transitive and A wr B in GR)";
    o.ms = elapsed_ms(start);
    return o;
  }
  const ColoredGraph g = graph_of(wr);
  const std::size_t nv = a.group.degree(), nw = b.group.degree();
  const ColoredGraph h1 = ColoredGraph::from_function(
      nv, [&](Point v1, Point v2) { return g.color(v1 * nw, v2 * nw); });
  const ColoredGraph h2 =
      ColoredGraph::from_function(nw, [&](Point w1, Point w2) { return g.color(w1, w2); });
  const bool composed = composition(h2, h1) == g;
  const bool fibre = automorphism_group(h1, limits_) == a.group;
  const bool base = automorphism_group(h2, limits_) == b.group;
  auto o = outcome("transitive-composition-decomposition", inputs, true,
                   composed && fibre && base);
  if (!composed) o.note += "G != H2 o H1; ";
  if (!fibre) o.note += "Aut(H1) != A; ";
  if (!base) o.note += "Aut(H2) != B; ";
  o.ms = elapsed_ms(start);
  return o;
}

std::vector<VerificationOutcome> Harness::product_action_report(const NamedGroup& a,
                                                                const NamedGroup& b) {
  const auto start = Clock::now();
  const std::vector<std::string> inputs{a.spec, b.spec};
  const Profile pa = profile(a), pb = profile(b);
  const std::size_t nv = a.group.degree(), nw = b.group.degree();
  const PermGroup p = wreath_product_action(a.group, b.group);
  const ColoredGraph g = graph_of(p);
  const PermGroup k = automorphism_group(g, limits_);
  const PermGroup clo_a = closure(a.group, ClosureKind::gr, limits_);
  const PermGroup clo_b = closure(b.group, ClosureKind::gr, limits_);

  std::vector<VerificationOutcome> out;
  const auto push = [&](VerificationOutcome o) {
    o.ms = elapsed_ms(start);
    out.push_back(std::move(o));
  };

  bool complete = false;
  const std::vector<Permutation> elems = sample(k, complete);
  bool inclusion = true, fibres_in_a = true;
  std::set<Permutation> betas;
  for (const Permutation& x : elems) {
    const auto d = decompose_product_action(x, nv, nw);
    if (!d || !clo_b.contains(d->beta)) {
      inclusion = false;
      continue;
    }
    betas.insert(d->beta);
    for (const Permutation& alpha : d->alphas) {
      if (!clo_a.contains(alpha)) inclusion = false;
      if (!a.group.contains(alpha)) fibres_in_a = false;
    }
  }
  {
    auto o = outcome("product-closure-inclusion", inputs, true, inclusion);
    o.note = std::to_string(elems.size()) + (complete ? " closure elements" : " closure generators") +
             " decomposed";
    push(std::move(o));
  }

  if (pa.dgr_plus && complete) {
    const PermGroup b_prime(nw, std::vector<Permutation>(betas.begin(), betas.end()), limits_);
    const bool closed_set = b_prime.order() == betas.size();
    const bool form = fibres_in_a && closed_set && b.group.is_subgroup_of(b_prime) &&
                      k.order() == saturating_mul(saturating_pow(a.group.order(), nw),
                                                  betas.size());
    auto o = outcome("product-closure-form", inputs, true, form);
    o.note = "|B'| = " + std::to_string(betas.size());
    push(std::move(o));
    if (pa.symmetric && nw <= limits_.hypergraph_cap) {
      const PermGroup orbit_closure = closure(b.group, ClosureKind::bgr, limits_);
      auto e = outcome("symmetric-fibre-extension", inputs, true,
                       closed_set && same_elements(b_prime, orbit_closure));
      e.note = "|B'| = " + std::to_string(betas.size()) + ", orbit closure of B has order " +
               std::to_string(orbit_closure.order());
      push(std::move(e));
    }
  }

  Verdict gr;
  gr.closure_order = k.order();
  gr.member = k == p;
  if (!gr.member)
    for (const Permutation& x : k.generators())
      if (!p.contains(x)) {
        gr.witness = x;
        gr.witness_verified = preserves(g, x) && !p.contains(x);
        break;
      }
  const auto clause = [&](const char* claim, bool predicted) {
    auto o = outcome(claim, inputs, predicted, gr.member);
    add_witness(o, gr);
    push(std::move(o));
  };

  if (!pa.dgr) clause("product-dgr-blocker", false);
  if (pa.transposable && pa.dgr && !(pa.gr || pa.i2)) clause("transposable-blocker", false);
  if (pb.bgr && *pb.bgr) clause("hypergraph-sufficiency", pa.dgr_plus);
  if (pa.symmetric && pb.bgr) clause("symmetric-fibre-criterion", *pb.bgr);
  if (pb.alternating && nw >= 3)
    clause("alternating-rank-criterion",
           pa.dgr_plus && (pa.rank >= nw + 1 || (pa.rank == nw && pa.nsp % 2 == 0)));
  if (pa.dgr_plus && (pa.rank >= nw + 1 || (pa.rank == nw && pa.nsp == 0)))
    clause("rank-sufficiency", true);
  if (pb.bgr && *pb.bgr) {
    const Verdict dgr = observe(p, ClosureKind::dgr);
    auto o = outcome("product-dgr-classification", inputs, pa.dgr, dgr.member);
    add_witness(o, dgr);
    push(std::move(o));
  }
  if (pa.symmetric && nw <= limits_.hypergraph_cap) {
    // Every edge {f, g} sits in the class R_X of its difference set X; the
    // color classes must be exactly the unions over B-orbits of subsets.
    const SubsetOrbits so = subset_orbits(b.group);
    std::map<Color, std::size_t> color_to_orbit;
    std::map<std::size_t, Color> orbit_to_color;
    bool matches = true;
    const std::size_t n = p.degree();
    for (Point f = 0; f < n && matches; ++f) {
      const auto df = function_digits(f, nv, nw);
      for (Point h = f + 1; h < n && matches; ++h) {
        const auto dh = function_digits(h, nv, nw);
        std::uint32_t mask = 0;
        for (std::size_t w = 0; w < nw; ++w)
          if (df[w] != dh[w]) mask |= 1u << w;
        const std::size_t label = so.label[mask];
        const Color c = g.color(f, h);
        auto [i1, n1] = color_to_orbit.try_emplace(c, label);
        auto [i2, n2] = orbit_to_color.try_emplace(label, c);
        if (i1->second != label || i2->second != c) matches = false;
      }
    }
    push(outcome("difference-set-classes", inputs, true, matches));
  }
  return out;
}

VerificationOutcome Harness::verify_membership(const std::string& claim, const NamedGroup& g,
                                               ClosureKind kind, bool stated) {
  const auto start = Clock::now();
  const Verdict v = observe(g.group, kind);
  auto o = outcome(claim, {g.spec, std::string(to_string(kind))}, stated, v.member);
  add_witness(o, v);
  o.note = "closure order " + std::to_string(v.closure_order) + " vs " +
           std::to_string(g.group.order());
  o.ms = elapsed_ms(start);
  return o;
}

VerificationOutcome Harness::verify_uncolored(const NamedGroup& g, bool stated) {
  const auto start = Clock::now();
  const auto family = uncolored_hypergraph_representable(g.group, limits_);
  bool observed = family.has_value();
  auto o = outcome("uncolored-representability", {g.spec}, stated, observed);
  if (family) {
    const bool ok = family_automorphisms(g.group.degree(), *family, limits_) == g.group;
    if (!ok) {
      o.observed = false;
      o.agree = o.predicted == o.observed;
      o.note = "family failed re-verification";
    } else {
      std::string s;
      for (std::uint32_t m : *family) s += (s.empty() ? "" : " ") + std::to_string(m);
      o.witnesses.push_back("family {" + s + "}");
    }
  } else {
    o.note = "all unions of subset-orbits tried";
  }
  o.ms = elapsed_ms(start);
  return o;
}

std::vector<std::string> catalog_names(std::size_t max_degree) {
  std::vector<std::string> out;
  for (std::size_t n = 2; n <= max_degree; ++n) {
    const std::string d = std::to_string(n);
    out.push_back("S" + d);
    if (n >= 4) out.push_back("A" + d);
    if (n >= 3) out.push_back("C" + d);
    if (n >= 4) out.push_back("D" + d);
    out.push_back("I" + d);
    if (n == 4) out.push_back("K4");
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> grid_pairs() {
  const auto names = catalog_names(6);
  const auto degree = [](const std::string& s) {
    return s == "K4" ? std::size_t{4} : std::stoul(s.substr(1));
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : names)
    for (const auto& b : names)
      if (degree(a) * degree(b) <= 12) out.emplace_back(a, b);
  return out;
}

bool SuiteReport::passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const VerificationOutcome& o) { return o.agree; });
}

std::vector<std::string> suite_sections() {
  return {"memberships", "imprimitive-gr", "imprimitive-dgr", "factorization",
          "parallel",    "constructions",  "product"};
}

namespace {

struct Task {
  std::string claim;
  std::vector<std::string> inputs;
  std::function<std::vector<VerificationOutcome>(Harness&, const Limits&)> run;
};

using Single = std::function<VerificationOutcome(Harness&, const Limits&)>;

Task single(std::string claim, std::vector<std::string> inputs, Single f) {
  return {std::move(claim), std::move(inputs),
          [f = std::move(f)](Harness& h, const Limits& l) {
            return std::vector<VerificationOutcome>{f(h, l)};
          }};
}

void add_section(std::string_view name, std::vector<Task>& tasks) {
  if (name == "memberships") {
    const auto stated = [&](const char* claim, const char* spec, ClosureKind kind, bool value) {
      tasks.push_back(single(claim, {spec}, [=](Harness& h, const Limits& l) {
        return h.verify_membership(claim, named(spec, l), kind, value);
      }));
    };
    for (const char* s : {"C3", "C4", "C5", "A4"})
      stated("small-group-memberships", s, ClosureKind::bgr, false);
    for (const char* s : {"C3", "C4", "C5", "I2"})
      stated("small-group-memberships", s, ClosureKind::dgr, true);
    stated("small-group-memberships", "I2", ClosureKind::gr, false);
    stated("small-group-memberships", "K4", ClosureKind::bgr, true);
    tasks.push_back(single("uncolored-representability", {"K4"},
                           [](Harness& h, const Limits& l) {
                             return h.verify_uncolored(named("K4", l), false);
                           }));
    stated("product-action-memberships", "wrp(S2,C3)", ClosureKind::gr, false);
    stated("product-action-memberships", "wrp(S2,C3)", ClosureKind::dgr, false);
    stated("product-action-memberships", "wrp(S2,C4)", ClosureKind::dgr, false);
    stated("product-action-memberships", "wrp(S2,C5)", ClosureKind::dgr, false);
    stated("product-action-memberships", "wrp(S2,S3)", ClosureKind::gr, true);
    stated("product-action-memberships", "wrp(I2,A3)", ClosureKind::gr, true);
    stated("product-action-memberships", "wrp(I2,A4)", ClosureKind::gr, false);
    stated("product-action-memberships", "wrp(C2,C3)", ClosureKind::dgr, false);
    stated("product-action-memberships", "wrp(C2,C3)", ClosureKind::bgr, false);
  } else if (name == "imprimitive-gr" || name == "imprimitive-dgr" || name == "factorization") {
    const std::string claim = name == "imprimitive-gr"    ? "imprimitive-gr-classification"
                              : name == "imprimitive-dgr" ? "imprimitive-dgr-classification"
                                                          : "orbital-factorization";
    for (const auto& [a, b] : grid_pairs())
      tasks.push_back(single(claim, {a, b}, [=](Harness& h, const Limits& l) {
        const NamedGroup na = named(a, l), nb = named(b, l);
        if (claim == "imprimitive-gr-classification")
          return h.verify_imprimitive_classification(na, nb);
        if (claim == "imprimitive-dgr-classification")
          return h.verify_digraph_classification(na, nb);
        return h.verify_orbital_factorization(na, nb);
      }));
  } else if (name == "parallel") {
    for (const auto& b : catalog_names(5))
      for (std::size_t t : {2, 3})
        tasks.push_back(single("parallel-multiple-law", {b, std::to_string(t)},
                               [=](Harness& h, const Limits& l) {
                                 return h.verify_parallel_multiple_law(named(b, l), t);
                               }));
  } else if (name == "constructions") {
    const std::vector<std::pair<std::string, std::string>> collapsed{
        {"I2", "C3"}, {"I3", "S2"}, {"perm(3; (0 1))", "C3"}, {"perm(4; (0 1)(2 3))", "C3"}};
    for (const auto& [a, b] : collapsed)
      tasks.push_back(single("collapsed-graph-construction", {a, b},
                             [=](Harness& h, const Limits& l) {
                               return h.build_lemma_A_graph(named(a, l), named(b, l)).second;
                             }));
    const std::vector<std::pair<std::string, std::string>> fibre{
        {"I3", "S2"}, {"perm(4; (0 1)(2 3))", "C3"}, {"perm(3; (0 1))", "C3"}, {"I3", "C3"}};
    for (const auto& [a, b] : fibre)
      tasks.push_back(single("fibre-graph-construction", {a, b},
                             [=](Harness& h, const Limits& l) {
                               return h.build_lemma_C_graph(named(a, l), named(b, l)).second;
                             }));
    const std::vector<std::pair<std::string, std::string>> transitive{
        {"S3", "S2"}, {"S2", "S3"}, {"K4", "S2"}, {"D4", "S2"}, {"S3", "S3"}, {"S2", "K4"}};
    for (const auto& [a, b] : transitive)
      tasks.push_back(single("transitive-composition-decomposition", {a, b},
                             [=](Harness& h, const Limits& l) {
                               return h.verify_transitive_decomposition(named(a, l),
                                                                        named(b, l));
                             }));
  } else if (name == "product") {
    const std::vector<std::pair<std::string, std::string>> fixtures{
        {"S2", "C3"}, {"S2", "S3"}, {"I2", "A3"}, {"I2", "A4"}, {"C2", "C3"},
        {"S2", "C4"}, {"S2", "C5"}, {"A4", "S2"}, {"C3", "S2"}, {"C4", "S2"},
        {"I2", "C3"}, {"I2", "S3"}, {"I3", "C3"}, {"I3", "S2"}, {"S3", "S2"},
        {"S3", "A3"}, {"S2", "A4"}, {"K4", "S2"}, {"C3", "C3"}, {"S2", "K4"}};
    for (const auto& [a, b] : fixtures)
      tasks.push_back({"product-action-report", {a, b}, [=](Harness& h, const Limits& l) {
                         return h.product_action_report(named(a, l), named(b, l));
                       }});
  } else {
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  }
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  std::vector<Task> tasks;
  if (name == "paper")
    for (const auto& s : suite_sections()) add_section(s, tasks);
  else
    add_section(name, tasks);

  Harness harness(options.limits, options.hooks);
  std::vector<std::vector<VerificationOutcome>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto start = Clock::now();
      try {
        results[i] = tasks[i].run(harness, options.limits);
      } catch (const std::exception& e) {
        VerificationOutcome o = outcome(tasks[i].claim, tasks[i].inputs, true, false);
        o.note = std::string("error: ") + e.what();
        o.ms = elapsed_ms(start);
        results[i] = {o};
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteReport report;
  for (auto& r : results)
    for (auto& o : r) {
      auto& c = report.counts[o.claim];
      ++c.total;
      c.agreed += o.agree;
      report.outcomes.push_back(std::move(o));
    }
  return report;
}

Json outcome_json(const VerificationOutcome& o, bool timings) {
  Json j{{"claim", o.claim},
         {"inputs", o.inputs},
         {"predicted", o.predicted},
         {"observed", o.observed},
         {"agree", o.agree}};
  if (!o.witnesses.empty()) j["witness"] = o.witnesses;
  if (!o.note.empty()) j["note"] = o.note;
  if (timings) j["ms"] = o.ms;
  return j;
}

Json suite_report_json(const SuiteReport& r, bool timings) {
  Json counts = Json::object();
  for (const auto& [claim, c] : r.counts) counts[claim] = {{"total", c.total}, {"agreed", c.agreed}};
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(outcome_json(o, timings));
  return Json{{"passed", r.passed()}, {"counts", counts}, {"outcomes", outcomes}};
}

Hooks mutated_hooks() {
  const PermGroup target = wreath_imprimitive(cyclic_group(2), cyclic_group(3));
  Hooks h;
  h.orbital_graph = [target](const PermGroup& g) {
    ColoredGraph graph = orbital_graph(g);
    if (g.degree() == target.degree() && g == target)
      graph = graph.with_color(0, 1, static_cast<Color>(graph.color_count() + 100));
    return graph;
  };
  return h;
}

}  // namespace wreath
