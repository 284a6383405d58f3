#include "otg/chroma.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "otg/error.hpp"

namespace otg {

bool proper_on_edges(std::span<const Edge> edges, const Coloring& c) {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return e.first < c.colors.size() && e.second < c.colors.size() &&
           c.colors[e.first] != c.colors[e.second];
  });
}

bool verify_coloring(const Graph& g, const Coloring& c) {
  if (c.colors.size() != g.order()) return false;
  for (auto colour : c.colors)
    if (colour >= c.palette) return false;
  return proper_on_edges(g.edges(), c);
}

Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  require(order.size() == g.order(), "greedy_coloring: order must permute the vertices");
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  Coloring c{std::vector<std::uint32_t>(g.order(), kNone), 0};
  std::vector<bool> seen(g.order(), false);
  std::vector<bool> taken;
  for (Vertex v : order) {
    require(v < g.order() && !seen[v], "greedy_coloring: order must permute the vertices");
    seen[v] = true;
    taken.assign(g.degree(v) + 1, false);
    for (Vertex u : g.neighbours(v))
      if (c.colors[u] != kNone && c.colors[u] < taken.size()) taken[c.colors[u]] = true;
    const auto colour = static_cast<std::uint32_t>(
        std::find(taken.begin(), taken.end(), false) - taken.begin());
    c.colors[v] = colour;
    c.palette = std::max(c.palette, colour + 1);
  }
  return c;
}

std::size_t greedy_clique_size(const Graph& g) {
  std::size_t best = g.order() > 0 ? 1 : 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> candidates(g.neighbours(v).begin(), g.neighbours(v).end());
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    std::vector<Vertex> clique{v};
    for (Vertex c : candidates)
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex m) { return g.adjacent(c, m); }))
        clique.push_back(c);
    best = std::max(best, clique.size());
  }
  return best;
}

namespace {

constexpr std::int32_t kUncoloured = -1;

// Shared DSATUR state: per-vertex counts of neighbours holding each colour,
// and the saturation (distinct neighbour colours).
class Dsatur {
 public:
  Dsatur(const Graph& g, std::uint32_t k)
      : g_(g), k_(k), colour_(g.order(), kUncoloured), counts_(g.order() * k, 0),
        saturation_(g.order(), 0), uncoloured_(g.order()) {}

  // Max saturation, ties by degree, then lowest index.
  Vertex select() const {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colour_[v] != kUncoloured) continue;
      if (!have || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
        have = true;
      }
    }
    return best;
  }

  bool available(Vertex v, std::uint32_t c) const { return counts_[v * k_ + c] == 0; }

  /// Returns false when some uncoloured neighbour is left with no colour.
  bool assign(Vertex v, std::uint32_t c) {
    colour_[v] = static_cast<std::int32_t>(c);
    --uncoloured_;
    bool alive = true;
    for (Vertex u : g_.neighbours(v)) {
      if (colour_[u] != kUncoloured) continue;
      if (counts_[u * k_ + c]++ == 0 && ++saturation_[u] == k_) alive = false;
    }
    return alive;
  }

  void unassign(Vertex v, std::uint32_t c) {
    for (Vertex u : g_.neighbours(v)) {
      if (colour_[u] != kUncoloured) continue;
      if (--counts_[u * k_ + c] == 0) --saturation_[u];
    }
    colour_[v] = kUncoloured;
    ++uncoloured_;
  }

  std::size_t uncoloured() const { return uncoloured_; }

  Coloring snapshot() const {
    Coloring c;
    c.colors.reserve(colour_.size());
    for (auto x : colour_) c.colors.push_back(static_cast<std::uint32_t>(x));
    c.palette = k_;
    return c;
  }

 private:
  const Graph& g_;
  std::uint32_t k_;
  std::vector<std::int32_t> colour_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> saturation_;
  std::size_t uncoloured_;
};

Coloring dsatur_heuristic(const Graph& g) {
  const auto k = static_cast<std::uint32_t>(g.max_degree() + 1);
  Dsatur state(g, k);
  std::uint32_t used = 0;
  while (state.uncoloured() > 0) {
    const Vertex v = state.select();
    std::uint32_t c = 0;
    while (!state.available(v, c)) ++c;
    state.assign(v, c);
    used = std::max(used, c + 1);
  }
  Coloring out = state.snapshot();
  out.palette = used;
  return out;
}

enum class Outcome { found, exhausted, aborted };

class KColouring {
 public:
  KColouring(const Graph& g, std::uint32_t k, std::uint64_t& nodes, std::uint64_t budget)
      : state_(g, k), k_(k), nodes_(nodes), budget_(budget) {}

  Outcome run() { return search(0); }
  Coloring witness() const { return state_.snapshot(); }

 private:
  Outcome search(std::uint32_t used) {
    if (state_.uncoloured() == 0) return Outcome::found;
    const Vertex v = state_.select();
    // Colours beyond the first unused one are symmetric.
    const std::uint32_t limit = std::min(k_, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (!state_.available(v, c)) continue;
      if (++nodes_ > budget_) return Outcome::aborted;
      if (state_.assign(v, c)) {
        const Outcome sub = search(std::max(used, c + 1));
        if (sub != Outcome::exhausted) return sub;
      }
      state_.unassign(v, c);
    }
    return Outcome::exhausted;
  }

  Dsatur state_;
  std::uint32_t k_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
};

void renumber_by_first_appearance(Coloring& c) {
  std::vector<std::uint32_t> relabel(c.palette, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (auto& colour : c.colors) {
    if (relabel[colour] == std::numeric_limits<std::uint32_t>::max()) relabel[colour] = next++;
    colour = relabel[colour];
  }
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options) {
  require(g.order() >= 1, "chromatic_number: graph has no vertices");
  auto report = [&](const std::string& line) {
    if (options.progress) options.progress(line);
  };

  std::vector<Vertex> natural(g.order());
  std::iota(natural.begin(), natural.end(), Vertex{0});
  Coloring best = dsatur_heuristic(g);
  if (Coloring first_fit = greedy_coloring(g, natural); first_fit.palette < best.palette)
    best = std::move(first_fit);

  ChromaticResult result;
  result.lower = static_cast<std::uint32_t>(greedy_clique_size(g));
  result.upper = best.palette;
  report("bounds lower=" + std::to_string(result.lower) + " upper=" + std::to_string(result.upper));

  while (result.lower < result.upper) {
    const std::uint32_t k = result.lower;
    KColouring search(g, k, result.nodes, options.budget);
    const Outcome outcome = search.run();
    if (outcome == Outcome::aborted) {
      report("budget exhausted after " + std::to_string(options.budget) + " nodes");
      result.witness = std::move(best);
      renumber_by_first_appearance(result.witness);
      return result;
    }
    if (outcome == Outcome::found) {
      best = search.witness();
      result.upper = k;
      report("upper=" + std::to_string(k) + " nodes=" + std::to_string(result.nodes));
    } else {
      result.lower = k + 1;
      report("lower=" + std::to_string(k + 1) + " nodes=" + std::to_string(result.nodes));
    }
  }
  result.exact = true;
  result.witness = std::move(best);
  renumber_by_first_appearance(result.witness);
  if (!verify_coloring(g, result.witness))
    fail(ErrorKind::internal, "chromatic_number produced an improper witness");
  return result;
}

Coloring sum_coloring(const Graph& g, std::span<const VertexPiece> pieces) {
  std::vector<std::int64_t> owner(g.order(), -1);
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const auto& piece = pieces[p];
    require(piece.coloring.colors.size() == piece.vertices.size(),
            "sum_coloring: piece colouring must be indexed by piece vertices");
    for (Vertex v : piece.vertices) {
      require(v < g.order(), "sum_coloring: vertex out of range");
      require(owner[v] < 0, "sum_coloring: pieces are not a partition (vertex " +
                                std::to_string(v) + " repeated)");
      owner[v] = static_cast<std::int64_t>(p);
    }
  }
  require(std::find(owner.begin(), owner.end(), -1) == owner.end(),
          "sum_coloring: pieces are not a partition (vertex missing)");

  Coloring out{std::vector<std::uint32_t>(g.order(), 0), 0};
  for (const auto& piece : pieces) {
    const Graph sub = g.induced(piece.vertices);
    require(verify_coloring(sub, piece.coloring), "sum_coloring: piece colouring is not proper");
    for (std::size_t i = 0; i < piece.vertices.size(); ++i)
      out.colors[piece.vertices[i]] = out.palette + piece.coloring.colors[i];
    out.palette += piece.coloring.palette;
  }
  return out;
}

Coloring product_coloring(const Graph& g, std::span<const EdgePiece> pieces) {
  std::set<Edge> covered;
  std::vector<Value> radices;
  for (const auto& piece : pieces) {
    require(piece.coloring.colors.size() == g.order(),
            "product_coloring: piece colouring must be total");
    for (auto colour : piece.coloring.colors)
      require(colour < piece.coloring.palette, "product_coloring: colour outside palette");
    for (auto [u, v] : piece.edges) {
      require(u < g.order() && v < g.order() && g.adjacent(u, v),
              "product_coloring: piece edge is not an edge of the graph");
      covered.emplace(std::min(u, v), std::max(u, v));
    }
    require(proper_on_edges(piece.edges, piece.coloring),
            "product_coloring: piece colouring is not proper on its edges");
    radices.push_back(std::max<std::uint32_t>(piece.coloring.palette, 1));
  }
  for (const Edge& e : g.edges())
    require(covered.count(e) == 1, "product_coloring: edge pieces do not cover the graph (edge " +
                                       std::to_string(e.first) + "-" + std::to_string(e.second) + ")");

  const LexFrame frame(std::move(radices));
  if (frame.size() > std::numeric_limits<std::uint32_t>::max())
    fail(ErrorKind::capacity_exceeded, "product_coloring: palette product too large");
  Coloring out{std::vector<std::uint32_t>(g.order(), 0), static_cast<std::uint32_t>(frame.size())};
  std::vector<Value> digits(pieces.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t p = 0; p < pieces.size(); ++p) digits[p] = pieces[p].coloring.colors[v];
    out.colors[v] = static_cast<std::uint32_t>(frame.encode(digits));
  }
  return out;
}

Coloring pullback_coloring(const VertexMap& f, const Graph& h, const Graph& g, const Coloring& c) {
  if (!verify_homomorphism(f, h, g))
    fail(ErrorKind::invalid_argument, "pullback_coloring: map is not a graph homomorphism");
  require(verify_coloring(g, c), "pullback_coloring: target colouring is not proper");
  Coloring out{std::vector<std::uint32_t>(h.order()), c.palette};
  for (Vertex v = 0; v < h.order(); ++v) out.colors[v] = c.colors[f[v]];
  return out;
}

PatternUnionResult pattern_union_chromatic(std::size_t length, Value theta,
                                           std::span<const OrderTypePattern> patterns,
                                           const SolverOptions& options) {
  require(!patterns.empty(), "pattern_union_chromatic: no patterns");
  PatternUnionResult result;
  result.bound = 1;
  std::vector<Edge> all_edges;
  std::vector<EdgePiece> pieces;
  std::vector<IncreasingTuple> labels;
  for (const auto& p : patterns) {
    require(p.n == length, "pattern_union_chromatic: pattern length " + std::to_string(p.n) +
                               " differs from " + std::to_string(length));
    Graph gp = order_type_graph(p, theta);
    require(gp.order() >= 1, "pattern_union_chromatic: no vertices (theta too small)");
    const ChromaticResult solved = chromatic_number(gp, options);
    result.conclusive = result.conclusive && solved.exact;
    result.pattern_chi.push_back(solved.upper);
    if (__builtin_mul_overflow(result.bound, std::uint64_t{solved.upper}, &result.bound))
      fail(ErrorKind::capacity_exceeded, "pattern_union_chromatic: bound overflows");
    all_edges.insert(all_edges.end(), gp.edges().begin(), gp.edges().end());
    pieces.push_back(EdgePiece{gp.edges(), solved.witness});
    if (labels.empty()) labels = gp.labels();
  }
  result.union_graph = Graph(std::move(labels), all_edges);
  result.coloring = product_coloring(result.union_graph, pieces);
  if (!verify_coloring(result.union_graph, result.coloring))
    fail(ErrorKind::internal, "pattern_union_chromatic: product colouring is improper");
  return result;
}

}  // namespace otg
