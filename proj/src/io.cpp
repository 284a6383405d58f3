#include "otg/io.hpp"

#include <algorithm>
#include <sstream>

#include "otg/error.hpp"

namespace otg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::parse_error, what); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Value natural(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad(std::string(what) + " must be a natural number");
  return j.get<Value>();
}

template <class T>
std::vector<T> naturals(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<T> out;
  for (const auto& x : j) out.push_back(static_cast<T>(natural(x, what)));
  return out;
}

json blocks_json(std::span<const ValueBlock> blocks) {
  json out = json::array();
  for (const auto& c : blocks) out.push_back({{"lo", c.lo}, {"hi", c.hi}, {"closed", c.closed}});
  return out;
}

std::vector<ValueBlock> blocks_from_json(const json& j) {
  if (!j.is_array()) bad("blocks must be an array");
  std::vector<ValueBlock> out;
  for (const auto& c : j)
    out.push_back({natural(field(c, "lo"), "lo"), natural(field(c, "hi"), "hi"),
                   field(c, "closed").get<bool>()});
  return out;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

json vertices_json(const std::vector<IncreasingTuple>& labels) {
  json out = json::array();
  for (const auto& t : labels) out.push_back(to_json(t));
  return out;
}

PieceKind piece_kind_from(const std::string& s) {
  if (s == "A") return PieceKind::ab_orderly;
  if (s == "B") return PieceKind::ba_orderly;
  if (s == "equal") return PieceKind::equal_singleton;
  bad("unknown piece kind \"" + s + "\"");
}

}  // namespace

json to_json(const IncreasingTuple& t) { return json(std::vector<Value>(t.values().begin(), t.values().end())); }

IncreasingTuple tuple_from_json(const json& j, TupleLimits limits) {
  return IncreasingTuple(naturals<Value>(j, "tuple entry"), limits);
}

json to_json(const OrderTypePattern& p) {
  return {{"n", p.n}, {"ra", p.ranks_a}, {"rb", p.ranks_b}};
}

OrderTypePattern pattern_from_json(const json& j) {
  auto p = OrderTypePattern::from_ranks(naturals<std::uint32_t>(field(j, "ra"), "ra"),
                                        naturals<std::uint32_t>(field(j, "rb"), "rb"));
  if (j.contains("n") && natural(j.at("n"), "n") != p.n) bad("pattern length disagrees with ranks");
  return p;
}

json to_json(const Graph& g) {
  return {{"kind", "graph"}, {"directed", false}, {"vertices", vertices_json(g.labels())},
          {"edges", edges_json(g.edges())}};
}

json to_json(const Digraph& g) {
  return {{"kind", "graph"}, {"directed", true}, {"vertices", vertices_json(g.labels())},
          {"edges", edges_json(g.arcs())}};
}

AnyGraph graph_from_json(const json& j) {
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("vertices must be an array");
  std::vector<IncreasingTuple> labels;
  for (const auto& v : vs) labels.push_back(tuple_from_json(v));
  const json& es = field(j, "edges");
  if (!es.is_array()) bad("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : es) {
    auto ends = naturals<Vertex>(e, "edge endpoint");
    if (ends.size() != 2) bad("edge must have two endpoints");
    edges.emplace_back(ends[0], ends[1]);
  }
  const bool directed = j.contains("directed") && j.at("directed").get<bool>();
  if (directed) return Digraph(std::move(labels), edges);
  return Graph(std::move(labels), edges);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v)
    out << "  " << v << " [label=\"" << g.label(static_cast<Vertex>(v)).to_string() << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v)
    out << "  " << v << " [label=\"" << g.label(static_cast<Vertex>(v)).to_string() << "\"];\n";
  for (auto [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_table(const AnyGraph& any) {
  std::ostringstream out;
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        constexpr bool directed = std::is_same_v<G, Digraph>;
        out << "vertices " << g.order() << "\n" << (directed ? "arcs " : "edges ") << g.size() << "\n";
        for (std::size_t v = 0; v < g.order(); ++v) {
          const auto u = static_cast<Vertex>(v);
          out << v << "\t" << g.label(u).to_string() << "\t";
          std::span<const Vertex> next;
          if constexpr (directed)
            next = g.successors(u);
          else
            next = g.neighbours(u);
          for (std::size_t i = 0; i < next.size(); ++i) out << (i ? "," : "") << next[i];
          out << "\n";
        }
      },
      any);
  return out.str();
}

json to_json(const Coloring& c) { return {{"palette", c.palette}, {"colors", c.colors}}; }

Coloring coloring_from_json(const json& j) {
  return {naturals<std::uint32_t>(field(j, "colors"), "colour"),
          static_cast<std::uint32_t>(natural(field(j, "palette"), "palette"))};
}

json chi_report(const ChromaticResult& r) {
  json out = {{"kind", "chi"}, {"exact", r.exact}};
  if (r.exact) {
    out["chi"] = r.chi();
  } else {
    out["inconclusive"] = true;
    out["lower"] = r.lower;
    out["upper"] = r.upper;
  }
  out["witness"] = r.witness.colors;
  out["nodes_explored"] = r.nodes;
  return out;
}

json decomposition_report(const IncreasingTuple& a, const IncreasingTuple& b,
                          const Decomposition& d) {
  json signs = json::array();
  for (Sign s : d.signs.signs) signs.push_back(to_string(s));
  json classes = json::array();
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    const ConvexClass& c = d.classes[i];
    json entry = {{"lo", c.lo}, {"hi", c.hi}, {"sign", to_string(c.sign)}};
    if (const auto& an = d.analyses[i]) {
      entry["swapped"] = an->swapped;
      entry["n_a"] = an->n_a();
      entry["deltas"] = an->deltas;
      entry["gammas"] = an->gammas;
      entry["zetas"] = an->zetas;
      entry["blocks"] = blocks_json(an->blocks);
    }
    classes.push_back(std::move(entry));
  }
  json pieces = json::array();
  for (const auto& p : d.cover.pieces)
    pieces.push_back({{"lo", p.lo}, {"hi", p.hi}, {"kind", to_string(p.kind)}, {"k", p.k},
                      {"blocks", blocks_json(p.blocks)}});
  return {{"kind", "decomposition"}, {"a", to_json(a)}, {"b", to_json(b)},
          {"signs", std::move(signs)}, {"classes", std::move(classes)},
          {"cover", {{"k", d.cover.k}, {"pieces", std::move(pieces)}}}, {"k", d.cover.k}};
}

CoverWitness cover_from_json(const json& j) {
  CoverWitness w;
  w.k = natural(field(j, "k"), "k");
  const json& pieces = field(j, "pieces");
  if (!pieces.is_array()) bad("pieces must be an array");
  for (const auto& p : pieces)
    w.pieces.push_back({natural(field(p, "lo"), "lo"), natural(field(p, "hi"), "hi"),
                        piece_kind_from(field(p, "kind").get<std::string>()),
                        natural(field(p, "k"), "k"),
                        p.contains("blocks") ? blocks_from_json(p.at("blocks")) : std::vector<ValueBlock>{}});
  return w;
}

json embedding_report(const IncreasingTuple& a, const IncreasingTuple& b, const EmbeddingMap& e,
                      const CoverWitness& w, bool verified) {
  const std::size_t edges = std::visit([](const auto& g) { return g.size(); }, e.source);
  json source = {{"type", e.kind == SourceKind::shift ? "sh" : "lsh"},
                 {"k", e.k},
                 {"N", e.n},
                 {"vertices", e.images.size()},
                 {"edges", edges}};
  json images = json::array();
  const auto& labels = std::visit([](const auto& g) -> const std::vector<IncreasingTuple>& { return g.labels(); },
                                  e.source);
  for (std::size_t v = 0; v < e.images.size(); ++v) {
    json digits = json::array();
    for (Value code : e.images[v].values()) digits.push_back(e.frame.decode(code));
    images.push_back({{"vertex", to_json(labels[v])}, {"digits", std::move(digits)},
                      {"codes", to_json(e.images[v])}});
  }
  json pieces = json::array();
  for (const auto& p : w.pieces)
    pieces.push_back({{"lo", p.lo}, {"hi", p.hi}, {"kind", to_string(p.kind)}, {"k", p.k},
                      {"blocks", blocks_json(p.blocks)}});
  std::vector<Value> radices(e.frame.radices().begin(), e.frame.radices().end());
  return {{"kind", "embedding"},
          {"a", to_json(a)},
          {"b", to_json(b)},
          {"pattern", to_json(otp(a, b))},
          {"k", e.k},
          {"cover", {{"k", w.k}, {"pieces", std::move(pieces)}}},
          {"source", std::move(source)},
          {"frame", std::move(radices)},
          {"images", std::move(images)},
          {"verified", verified}};
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump() + "\n"; }

namespace {

VerifyOutcome verify_graph(const json& j) {
  const AnyGraph g = graph_from_json(j);
  const bool same = std::visit([&](const auto& x) { return x == std::get<std::decay_t<decltype(x)>>(graph_from_json(to_json(x))); }, g);
  if (!same) return {false, false, "graph does not survive a JSON round trip"};
  const std::size_t n = std::visit([](const auto& x) { return x.order(); }, g);
  const std::size_t m = std::visit([](const auto& x) { return x.size(); }, g);
  if (m != j.at("edges").size()) return {false, false, "edge list contains duplicates"};
  return {true, false, "graph ok: " + std::to_string(n) + " vertices, " + std::to_string(m) + " edges"};
}

const Graph& undirected(const std::optional<AnyGraph>& graph, const char* what) {
  if (!graph) fail(ErrorKind::invalid_argument, std::string(what) + " verification needs --graph");
  if (!std::holds_alternative<Graph>(*graph))
    fail(ErrorKind::invalid_argument, std::string(what) + " verification needs an undirected graph");
  return std::get<Graph>(*graph);
}

VerifyOutcome verify_coloring_artifact(const json& j, const std::optional<AnyGraph>& graph) {
  const Graph& g = undirected(graph, "colouring");
  const Coloring c = coloring_from_json(j);
  if (!verify_coloring(g, c)) return {false, false, "colouring is not proper"};
  return {true, false, "colouring ok: palette " + std::to_string(c.palette)};
}

VerifyOutcome verify_chi(const json& j, const std::optional<AnyGraph>& graph, std::uint64_t budget) {
  const Graph& g = undirected(graph, "chi report");
  const auto colors = naturals<std::uint32_t>(field(j, "witness"), "colour");
  const bool exact = field(j, "exact").get<bool>();
  const auto claimed = static_cast<std::uint32_t>(natural(field(j, exact ? "chi" : "upper"), "chi"));
  if (!verify_coloring(g, Coloring{colors, claimed}))
    return {false, false, "witness is not a proper colouring with the claimed palette"};
  if (!exact) return {true, false, "witness ok for upper bound " + std::to_string(claimed)};
  SolverOptions options;
  options.budget = budget;
  const ChromaticResult r = chromatic_number(g, options);
  if (!r.exact) return {false, true, "re-solve ran out of budget"};
  if (r.chi() != claimed)
    return {false, false, "claimed chi " + std::to_string(claimed) + " but re-solve gives " +
                              std::to_string(r.chi())};
  return {true, false, "chi ok: " + std::to_string(claimed)};
}

VerifyOutcome verify_decomposition(const json& j) {
  const IncreasingTuple a = tuple_from_json(field(j, "a"));
  const IncreasingTuple b = tuple_from_json(field(j, "b"));
  const CoverWitness w = cover_from_json(field(j, "cover"));
  if (auto defect = cover_defect(a, b, w)) return {false, false, "cover invalid: " + *defect};
  const Decomposition d = decompose(a, b);
  if (decomposition_report(a, b, d) != j)
    return {false, false, "report differs from a fresh decomposition"};
  return {true, false, "decomposition ok: k = " + std::to_string(w.k)};
}

VerifyOutcome verify_embedding_artifact(const json& j) {
  const IncreasingTuple a = tuple_from_json(field(j, "a"));
  const IncreasingTuple b = tuple_from_json(field(j, "b"));
  const json& src = field(j, "source");
  const std::string type = field(src, "type").get<std::string>();
  const std::size_t k = natural(field(src, "k"), "k");
  const Value n = natural(field(src, "N"), "N");
  if (k == 0 || k > TupleLimits{}.max_length) bad("source k out of range");

  EmbeddingMap e;
  e.k = k;
  e.n = n;
  const Digraph arcs = detail::lshift_digraph_unchecked(k, n);
  if (type == "sh") {
    e.kind = SourceKind::shift;
    e.source = arcs.symmetrize();
  } else if (type == "lsh") {
    e.kind = SourceKind::lshift;
    e.source = arcs;
  } else {
    bad("unknown source type \"" + type + "\"");
  }
  e.frame = LexFrame(naturals<Value>(field(j, "frame"), "radix"));
  const json& images = field(j, "images");
  if (!images.is_array() || images.size() != arcs.order())
    return {false, false, "image count does not match the source"};
  for (std::size_t v = 0; v < images.size(); ++v) {
    const json& img = images[v];
    if (tuple_from_json(field(img, "vertex")) != arcs.label(static_cast<Vertex>(v)))
      return {false, false, "vertex " + std::to_string(v) + " is listed out of order"};
    const IncreasingTuple codes =
        tuple_from_json(field(img, "codes"), TupleLimits{a.size(), e.frame.size() - 1});
    const json& digits = field(img, "digits");
    if (!digits.is_array() || digits.size() != codes.size())
      return {false, false, "digit and code forms disagree at vertex " + std::to_string(v)};
    for (std::size_t i = 0; i < codes.size(); ++i)
      if (e.frame.encode(naturals<Value>(digits[i], "digit")) != codes[i])
        return {false, false, "digit and code forms disagree at vertex " + std::to_string(v)};
    e.images.push_back(codes);
  }
  if (!verify_embedding(e, otp(a, b))) return {false, false, "some source edge is not mapped onto the pattern"};
  if (!field(j, "verified").get<bool>()) return {false, false, "artifact records a failed verification"};
  return {true, false, "embedding ok: " + std::to_string(images.size()) + " vertices checked"};
}

}  // namespace

VerifyOutcome verify_artifact(const json& artifact, const std::optional<AnyGraph>& graph,
                              std::uint64_t budget) {
  const std::string kind = artifact.is_object() && artifact.contains("kind") && artifact.at("kind").is_string()
                               ? artifact.at("kind").get<std::string>()
                           : artifact.is_object() && artifact.contains("colors") ? "coloring"
                                                                                 : "";
  try {
    if (kind == "graph") return verify_graph(artifact);
    if (kind == "coloring") return verify_coloring_artifact(artifact, graph);
    if (kind == "chi") return verify_chi(artifact, graph, budget);
    if (kind == "decomposition") return verify_decomposition(artifact);
    if (kind == "embedding") return verify_embedding_artifact(artifact);
  } catch (const json::exception& e) {
    bad(std::string("malformed artifact: ") + e.what());
  }
  bad("artifact has no recognised \"kind\"");
}

}  // namespace otg::io
