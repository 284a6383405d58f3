#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "otg/seq.hpp"

namespace otg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
/// Total map from source vertex indices to target vertex indices.
using VertexMap = std::vector<Vertex>;

/// Hard cap on generated vertex sets; the adjacency matrix is quadratic.
inline constexpr std::size_t kMaxVertices = 8192;

/// Simple undirected graph on labelled vertices. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Edges may be given in either orientation and may repeat; self-loops and
  /// out-of-range endpoints are rejected.
  Graph(std::vector<IncreasingTuple> labels, std::span<const Edge> edges);

  /// Vertices labelled (0), (1), ..., (n-1).
  static Graph unlabelled(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  const IncreasingTuple& label(Vertex v) const { return labels_.at(v); }
  const std::vector<IncreasingTuple>& labels() const noexcept { return labels_; }

  /// Sorted, each edge once with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.labels_ == y.labels_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<IncreasingTuple> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> matrix_;
};

/// Directed graph without self-arcs.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<IncreasingTuple> labels, std::span<const Edge> arcs);

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return arcs_.size(); }
  const IncreasingTuple& label(Vertex v) const { return labels_.at(v); }
  const std::vector<IncreasingTuple>& labels() const noexcept { return labels_; }
  /// Sorted lexicographically by (tail, head).
  const std::vector<Edge>& arcs() const noexcept { return arcs_; }
  std::span<const Vertex> successors(Vertex v) const { return successors_.at(v); }
  bool has_arc(Vertex u, Vertex v) const;

  Graph symmetrize() const;

  friend bool operator==(const Digraph& x, const Digraph& y) {
    return x.labels_ == y.labels_ && x.arcs_ == y.arcs_;
  }

 private:
  std::vector<IncreasingTuple> labels_;
  std::vector<Edge> arcs_;
  std::vector<std::vector<Vertex>> successors_;
};

/// Index of `t` within increasing_tuples(t.size(), n), or nullopt when some
/// value is >= n.
std::optional<Vertex> tuple_index(const IncreasingTuple& t, Value n);

// Generators. Vertices are the increasing tuples over 0..n-1 in
// lexicographic order.

/// Shift graph: s ~ t iff t is s shifted left by one coordinate or vice
/// versa. r = 1 gives the complete graph.
Graph shift_graph(std::size_t r, Value n);
/// Left shift digraph: eta -> rho iff eta(i) = rho(i-1) for 0 < i < k
/// (k > 1), or eta(0) < rho(0) (k = 1).
Digraph lshift_digraph(std::size_t k, Value n);
/// Right shift digraph: rho(i) = eta(i-1) for 0 < i < k (k > 1), or
/// rho(0) < eta(0) (k = 1).
Digraph rshift_digraph(std::size_t k, Value n);
/// Order-type graph on increasing p.n-tuples over 0..theta-1.
Graph order_type_graph(const OrderTypePattern& p, Value theta);

/// (x_0..x_{k-1}) -> (n-1-x_{k-1}, ..., n-1-x_0); maps RSh_k(n) onto LSh_k(n).
IncreasingTuple reverse_tuple(const IncreasingTuple& x, Value n);

namespace detail {
// The same generators without the n > k precondition; empty vertex sets are
// allowed. Used where a vacuous instance is meaningful.
Graph shift_graph_unchecked(std::size_t r, Value n);
Digraph lshift_digraph_unchecked(std::size_t k, Value n);
}  // namespace detail

bool verify_homomorphism(const VertexMap& f, const Graph& src, const Graph& dst);
bool verify_homomorphism(const VertexMap& f, const Digraph& src, const Digraph& dst);

/// Surjective and edge-reflecting: u ~ v iff f(u) ~ f(v).
bool is_strong_surjective_homomorphism(const VertexMap& f, const Graph& src, const Graph& dst);

/// Blow-up of g where vertex v is replaced by copies[v] >= 1 independent
/// copies; returns the graph and its projection onto g.
std::pair<Graph, VertexMap> duplicate_vertices(const Graph& g, std::span<const std::uint32_t> copies);

bool is_connected(const Graph& g);

enum class SearchStatus { found, absent, inconclusive };

struct SubgraphSearchResult {
  SearchStatus status = SearchStatus::absent;
  VertexMap map;  ///< Injective h -> g map when status == found.
  std::uint64_t nodes = 0;
};

/// Backtracking search for an injective edge-preserving map h -> g. A
/// search that runs out of `budget` decision nodes is inconclusive, never
/// absent.
SubgraphSearchResult find_subgraph_embedding(const Graph& h, const Graph& g,
                                             std::uint64_t budget);

}  // namespace otg
