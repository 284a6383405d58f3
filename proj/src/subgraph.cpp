#include <algorithm>
#include <limits>

#include "otg/error.hpp"
#include "otg/graph.hpp"

namespace otg {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& h, const Graph& g, std::uint64_t budget)
      : h_(h), g_(g), budget_(budget), image_(h.order(), kUnmapped), used_(g.order(), false) {
    order_vertices();
  }

  SubgraphSearchResult run() {
    SubgraphSearchResult result;
    if (h_.order() > g_.order()) {
      result.status = SearchStatus::absent;
      return result;
    }
    const Outcome outcome = extend(0);
    result.nodes = nodes_;
    if (outcome == Outcome::found) {
      result.status = SearchStatus::found;
      result.map = image_;
    } else {
      result.status = outcome == Outcome::aborted ? SearchStatus::inconclusive : SearchStatus::absent;
    }
    return result;
  }

 private:
  enum class Outcome { found, exhausted, aborted };
  static constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();

  // Most-constrained-first: each next vertex has the most already-ordered
  // neighbours, ties by degree then index.
  void order_vertices() {
    const std::size_t n = h_.order();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_neighbours(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = kUnmapped;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kUnmapped || placed_neighbours[v] > placed_neighbours[best] ||
            (placed_neighbours[v] == placed_neighbours[best] && h_.degree(v) > h_.degree(best)))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : h_.neighbours(best)) ++placed_neighbours[w];
    }
  }

  Outcome extend(std::size_t depth) {
    if (depth == order_.size()) return Outcome::found;
    const Vertex v = order_[depth];

    std::vector<Vertex> mapped_neighbours;
    for (Vertex w : h_.neighbours(v))
      if (image_[w] != kUnmapped) mapped_neighbours.push_back(image_[w]);

    auto try_candidate = [&](Vertex c) -> std::optional<Outcome> {
      if (used_[c] || g_.degree(c) < h_.degree(v)) return std::nullopt;
      for (Vertex m : mapped_neighbours)
        if (!g_.adjacent(c, m)) return std::nullopt;
      if (++nodes_ > budget_) return Outcome::aborted;
      image_[v] = c;
      used_[c] = true;
      const Outcome sub = extend(depth + 1);
      if (sub != Outcome::exhausted) return sub;
      image_[v] = kUnmapped;
      used_[c] = false;
      return std::nullopt;
    };

    if (!mapped_neighbours.empty()) {
      for (Vertex c : g_.neighbours(mapped_neighbours.front()))
        if (auto r = try_candidate(c)) return *r;
    } else {
      for (Vertex c = 0; c < g_.order(); ++c)
        if (auto r = try_candidate(c)) return *r;
    }
    return Outcome::exhausted;
  }

  const Graph& h_;
  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  VertexMap image_;
  std::vector<bool> used_;
};

}  // namespace

SubgraphSearchResult find_subgraph_embedding(const Graph& h, const Graph& g, std::uint64_t budget) {
  return EmbeddingSearch(h, g, budget).run();
}

}  // namespace otg
