#include "wreath/io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "wreath/errors.hpp"
#include "wreath/products.hpp"

namespace wreath {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Limits& limits) : s_(text), limits_(limits) {}

  PermGroup parse() {
    PermGroup g = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return g;
  }

  Permutation permutation(std::size_t degree) {
    Permutation p = cycles(degree);
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  std::size_t number() {
    skip();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail("expected a number");
    i_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  PermGroup expr() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::string_view word = s_.substr(start, i_ - start);
    if (word.empty()) fail("expected a group name or constructor");
    if (!peek('(')) {
      try {
        return catalog_group(word, limits_);
      } catch (const ParseError& e) {
        throw ParseError(e.what() + std::string(" (token '") + std::string(word) + "')", start);
      }
    }
    ++i_;
    if (word == "perm") {
      const std::size_t degree = number();
      expect(';');
      std::vector<Permutation> gens;
      do {
        gens.push_back(cycles(degree));
      } while (peek(',') && ++i_);
      expect(')');
      if (degree < 2) fail("degree must be at least 2");
      return PermGroup(degree, std::move(gens), limits_);
    }
    if (word == "par") {
      PermGroup b = expr();
      expect(',');
      const std::size_t t = number();
      expect(')');
      if (t < 1) fail("parallel multiple needs t >= 1");
      return parallel_multiple(b, t);
    }
    if (word != "wr" && word != "wrp" && word != "x") {
      i_ = start;
      fail("unknown constructor '" + std::string(word) + "'");
    }
    PermGroup a = expr();
    expect(',');
    PermGroup b = expr();
    expect(')');
    if (word == "wr") return wreath_imprimitive(a, b);
    if (word == "wrp") return wreath_product_action(a, b);
    return direct_product(a, b);
  }

  Permutation cycles(std::size_t degree) {
    std::vector<Cycle> out;
    if (!peek('(')) fail("expected a cycle");
    while (peek('(')) {
      ++i_;
      Cycle c;
      while (!peek(')')) {
        if (peek(',')) {
          ++i_;
          continue;
        }
        const std::size_t at = i_;
        const std::size_t x = number();
        if (x >= degree) {
          i_ = at;
          fail("point " + std::to_string(x) + " out of range");
        }
        c.push_back(static_cast<Point>(x));
      }
      ++i_;
      if (!c.empty()) out.push_back(std::move(c));
    }
    try {
      return Permutation::from_cycles(degree, out);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  const Limits& limits_;
};

std::vector<Color> read_colors(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("missing array '") + key + "'");
  return j[key].get<std::vector<Color>>();
}

std::size_t read_n(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_unsigned()) throw ParseError("missing 'n'");
  return j["n"].get<std::size_t>();
}

const char* kPalette[] = {"black",  "red",    "blue",    "darkgreen", "orange",
                          "purple", "brown",  "magenta", "cyan",      "gold",
                          "gray",   "navy",   "olive",   "teal",      "pink"};

std::string pen(Color c) {
  constexpr std::size_t k = sizeof(kPalette) / sizeof(kPalette[0]);
  return kPalette[c % k];
}

}  // namespace

PermGroup catalog_group(std::string_view name, const Limits& limits) {
  if (name == "K4") return klein_group(limits);
  if (name.size() < 2) throw ParseError("unknown group name '" + std::string(name) + "'");
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc{} || ptr != name.data() + name.size())
    throw ParseError("unknown group name '" + std::string(name) + "'");
  const auto need = [&](std::size_t lo) {
    if (n < lo)
      throw ParseError(std::string(name) + " needs degree at least " + std::to_string(lo));
  };
  switch (name[0]) {
    case 'S': need(2); return symmetric_group(n, limits);
    case 'A': need(2); return alternating_group(n, limits);
    case 'C': need(2); return cyclic_group(n, limits);
    case 'D': need(3); return dihedral_group(n, limits);
    case 'I': need(2); return trivial_group(n, limits);
    default: break;
  }
  throw ParseError("unknown group name '" + std::string(name) + "'");
}

PermGroup parse_group_spec(std::string_view text, const Limits& limits) {
  return Parser(text, limits).parse();
}

Permutation parse_permutation(std::size_t degree, std::string_view text) {
  Limits limits;
  return Parser(text, limits).permutation(degree);
}

Json cycles_json(const Permutation& p) {
  Json out = Json::array();
  for (const Cycle& c : p.cycles()) out.push_back(c);
  return out;
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Permutation& p : g.generators()) gens.push_back(cycles_json(p));
  return Json{{"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& j, const Limits& limits) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw ParseError("group JSON needs 'degree' and 'generators'");
  const auto degree = j["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  for (const Json& g : j["generators"]) {
    try {
      gens.push_back(Permutation::from_cycles(degree, g.get<std::vector<Cycle>>()));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }
  return PermGroup(degree, std::move(gens), limits);
}

Json graph_to_json(const ColoredGraph& g) {
  return Json{{"kind", "graph"}, {"n", g.size()}, {"colors", g.upper()}};
}

ColoredGraph graph_from_json(const Json& j) {
  try {
    return ColoredGraph(read_n(j), read_colors(j, "colors"));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json digraph_to_json(const ColoredDigraph& g) {
  return Json{{"kind", "digraph"},
              {"n", g.size()},
              {"colors", g.arcs()},
              {"vertex_colors", g.vertex_colors()}};
}

ColoredDigraph digraph_from_json(const Json& j) {
  std::vector<Color> vertex;
  if (j.contains("vertex_colors")) vertex = read_colors(j, "vertex_colors");
  try {
    return ColoredDigraph(read_n(j), read_colors(j, "colors"), std::move(vertex));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json hypergraph_to_json(const ColoredHypergraph& h) {
  Json colors = Json::object();
  for (std::uint32_t m = 1; m < h.colors().size(); ++m) colors[std::to_string(m)] = h.color(m);
  return Json{{"kind", "hypergraph"}, {"n", h.size()}, {"colors", colors}};
}

ColoredHypergraph hypergraph_from_json(const Json& j) {
  const std::size_t n = read_n(j);
  if (n > 24) throw ParseError("hypergraph too large");
  if (!j.contains("colors") || !j["colors"].is_object())
    throw ParseError("hypergraph JSON needs a 'colors' object");
  const std::size_t total = std::size_t{1} << n;
  std::vector<Color> colors(total, 0);
  std::vector<bool> seen(total, false);
  for (const auto& [key, value] : j["colors"].items()) {
    std::size_t m = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), m);
    if (ec != std::errc{} || ptr != key.data() + key.size() || m == 0 || m >= total)
      throw ParseError("bad subset key '" + key + "'");
    colors[m] = value.get<Color>();
    seen[m] = true;
  }
  for (std::size_t m = 1; m < total; ++m)
    if (!seen[m]) throw ParseError("subset " + std::to_string(m) + " has no color");
  try {
    return ColoredHypergraph(n, std::move(colors));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string graph_to_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Point v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
  for (Point v = 0; v < g.size(); ++v)
    for (Point w = v + 1; w < g.size(); ++w)
      out << "  " << v << " -- " << w << " [color=" << pen(g.color(v, w))
          << ", label=" << g.color(v, w) << "];\n";
  out << "}\n";
  return out.str();
}

std::string digraph_to_dot(const ColoredDigraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Point v = 0; v < g.size(); ++v)
    out << "  " << v << " [color=" << pen(g.vertex_color(v)) << ", xlabel=" << g.vertex_color(v)
        << "];\n";
  for (Point v = 0; v < g.size(); ++v)
    for (Point w = 0; w < g.size(); ++w)
      if (v != w)
        out << "  " << v << " -> " << w << " [color=" << pen(g.color(v, w))
            << ", label=" << g.color(v, w) << "];\n";
  out << "}\n";
  return out.str();
}

Json orbital_report_json(const PermGroup& g, const Limits& limits) {
  const OrbitalData d = orbitals(g);
  Json list = Json::array();
  for (std::size_t k = 0; k < d.rank; ++k)
    list.push_back({{"index", k},
                    {"representative", {d.representative[k].first, d.representative[k].second}},
                    {"size", d.size[k]},
                    {"trivial", static_cast<bool>(d.trivial[k])}});
  const auto alpha = transposing_permutation(g, limits);
  Json out{{"rank", d.rank},
           {"nsp", d.nsp},
           {"orbitals", list},
           {"pairing", d.pairing},
           {"transposable", alpha.has_value()}};
  if (alpha) out["transposer"] = cycles_json(*alpha);
  return out;
}

Json class_report_json(const ClassReport& r) {
  const auto flag = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  const auto order = [](const std::optional<PermGroup>& g) {
    return g ? Json(g->order()) : Json(nullptr);
  };
  const auto witness = [](const std::optional<Permutation>& p) {
    return p ? cycles_json(*p) : Json(nullptr);
  };
  Json out{{"order", r.order},
           {"gr", r.in_gr},
           {"dgr", r.in_dgr},
           {"bgr", flag(r.in_bgr)},
           {"dgr_plus", r.in_dgr_plus},
           {"closure_orders",
            {{"gr", order(r.closure_gr)}, {"dgr", order(r.closure_dgr)}, {"bgr", order(r.closure_bgr)}}},
           {"witnesses",
            {{"gr", witness(r.witness_gr)}, {"dgr", witness(r.witness_dgr)}, {"bgr", witness(r.witness_bgr)}}},
           {"transposer", witness(r.transposer)}};
  return out;
}

}  // namespace wreath
