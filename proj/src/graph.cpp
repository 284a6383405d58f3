#include "otg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "otg/error.hpp"

namespace otg {

namespace {

void check_vertex_count(std::size_t n) {
  if (n > kMaxVertices)
    fail(ErrorKind::capacity_exceeded, "graph with " + std::to_string(n) +
                                           " vertices exceeds the cap of " +
                                           std::to_string(kMaxVertices));
}

std::vector<IncreasingTuple> singleton_labels(std::size_t n) {
  std::vector<IncreasingTuple> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.emplace_back(std::vector<Value>{i}, TupleLimits{1, std::numeric_limits<Value>::max()});
  return labels;
}

}  // namespace

Graph::Graph(std::vector<IncreasingTuple> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  check_vertex_count(n);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    require(u < n && v < n, "edge endpoint out of range");
    require(u != v, "graphs are irreflexive: self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(n, {});
  words_ = (n + 63) / 64;
  matrix_.assign(n * words_, 0);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    matrix_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    matrix_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

Graph Graph::unlabelled(std::size_t n, std::span<const Edge> edges) {
  check_vertex_count(n);
  return Graph(singleton_labels(n), edges);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : adjacency_) best = std::max(best, row.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  require(u < order() && v < order(), "vertex out of range");
  return (matrix_[u * words_ + v / 64] >> (v % 64)) & 1u;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<IncreasingTuple> labels;
  labels.reserve(vertices.size());
  std::vector<std::int64_t> position(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(vertices[i] < order(), "induced: vertex out of range");
    require(position[vertices[i]] < 0, "induced: repeated vertex");
    position[vertices[i]] = static_cast<std::int64_t>(i);
    labels.push_back(labels_[vertices[i]]);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : edges_)
    if (position[u] >= 0 && position[v] >= 0)
      edges.emplace_back(static_cast<Vertex>(position[u]), static_cast<Vertex>(position[v]));
  return Graph(std::move(labels), edges);
}

Digraph::Digraph(std::vector<IncreasingTuple> labels, std::span<const Edge> arcs)
    : labels_(std::move(labels)), arcs_(arcs.begin(), arcs.end()) {
  const std::size_t n = labels_.size();
  check_vertex_count(n);
  for (auto [u, v] : arcs_) {
    require(u < n && v < n, "arc endpoint out of range");
    require(u != v, "digraphs here have no self-arcs: vertex " + std::to_string(u));
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  successors_.assign(n, {});
  for (auto [u, v] : arcs_) successors_[u].push_back(v);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  require(u < order() && v < order(), "vertex out of range");
  const auto& row = successors_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

Graph Digraph::symmetrize() const { return Graph(labels_, arcs_); }

std::optional<Vertex> tuple_index(const IncreasingTuple& t, Value n) {
  const std::size_t r = t.size();
  if (t.back() >= n) return std::nullopt;
  std::uint64_t rank = 0;
  Value next = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (Value v = next; v < t[i]; ++v) rank += binomial(n - 1 - v, r - 1 - i);
    next = t[i] + 1;
  }
  return static_cast<Vertex>(rank);
}

namespace {

// Tuples reachable from s by a left shift: (s_1, .., s_{r-1}, x) with
// x > s_{r-1}, x < n. For r = 1 every larger singleton.
template <typename Emit>
void for_each_left_shift(const IncreasingTuple& s, Value n, Emit&& emit) {
  const std::size_t r = s.size();
  std::vector<Value> next(s.values().begin() + 1, s.values().end());
  next.push_back(0);
  for (Value x = s.back() + 1; x < n; ++x) {
    next.back() = x;
    emit(IncreasingTuple(next, TupleLimits{r, std::numeric_limits<Value>::max()}));
  }
}

std::vector<IncreasingTuple> checked_tuples(std::size_t r, Value n) {
  if (r <= n) check_vertex_count(binomial(n, r));
  return increasing_tuples(r, n);
}

}  // namespace

namespace detail {

Digraph lshift_digraph_unchecked(std::size_t k, Value n) {
  require(k >= 1, "shift arity must be at least 1");
  auto vertices = checked_tuples(k, n);
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < vertices.size(); ++u)
    for_each_left_shift(vertices[u], n, [&](const IncreasingTuple& t) {
      arcs.emplace_back(u, *tuple_index(t, n));
    });
  return Digraph(std::move(vertices), arcs);
}

Graph shift_graph_unchecked(std::size_t r, Value n) {
  return lshift_digraph_unchecked(r, n).symmetrize();
}

}  // namespace detail

Graph shift_graph(std::size_t r, Value n) {
  require(r >= 1, "shift_graph: r must be at least 1");
  require(n > r, "shift_graph: need n > r (n = " + std::to_string(n) +
                     ", r = " + std::to_string(r) + ")");
  return detail::shift_graph_unchecked(r, n);
}

Digraph lshift_digraph(std::size_t k, Value n) {
  require(k >= 1, "lshift_digraph: k must be at least 1");
  require(n > k, "lshift_digraph: need n > k");
  return detail::lshift_digraph_unchecked(k, n);
}

Digraph rshift_digraph(std::size_t k, Value n) {
  require(k >= 1, "rshift_digraph: k must be at least 1");
  require(n > k, "rshift_digraph: need n > k");
  auto vertices = checked_tuples(k, n);
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < vertices.size(); ++u)
    for_each_left_shift(vertices[u], n, [&](const IncreasingTuple& t) {
      arcs.emplace_back(*tuple_index(t, n), u);
    });
  return Digraph(std::move(vertices), arcs);
}

Graph order_type_graph(const OrderTypePattern& p, Value theta) {
  require(p.n >= 1, "order_type_graph: empty pattern");
  if (!p.irreflexive()) fail(ErrorKind::invalid_argument, "pattern not irreflexive");
  auto vertices = checked_tuples(p.n, theta);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices.size(); ++u)
    for (Vertex v = 0; v < vertices.size(); ++v)
      if (u != v && realizes(vertices[u], vertices[v], p)) edges.emplace_back(u, v);
  return Graph(std::move(vertices), edges);
}

IncreasingTuple reverse_tuple(const IncreasingTuple& x, Value n) {
  require(x.back() < n, "reverse_tuple: value outside 0..n-1");
  std::vector<Value> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = n - 1 - x[x.size() - 1 - i];
  return IncreasingTuple(std::move(out), TupleLimits{x.size(), std::numeric_limits<Value>::max()});
}

namespace {
void check_map(const VertexMap& f, std::size_t src_order, std::size_t dst_order) {
  require(f.size() == src_order, "vertex map is not total on the source");
  for (Vertex w : f) require(w < dst_order, "vertex map target out of range");
}
}  // namespace

bool verify_homomorphism(const VertexMap& f, const Graph& src, const Graph& dst) {
  check_map(f, src.order(), dst.order());
  return std::all_of(src.edges().begin(), src.edges().end(), [&](const Edge& e) {
    return f[e.first] != f[e.second] && dst.adjacent(f[e.first], f[e.second]);
  });
}

bool verify_homomorphism(const VertexMap& f, const Digraph& src, const Digraph& dst) {
  check_map(f, src.order(), dst.order());
  return std::all_of(src.arcs().begin(), src.arcs().end(), [&](const Edge& e) {
    return f[e.first] != f[e.second] && dst.has_arc(f[e.first], f[e.second]);
  });
}

bool is_strong_surjective_homomorphism(const VertexMap& f, const Graph& src, const Graph& dst) {
  check_map(f, src.order(), dst.order());
  std::vector<bool> hit(dst.order(), false);
  for (Vertex w : f) hit[w] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  for (Vertex u = 0; u < src.order(); ++u)
    for (Vertex v = u + 1; v < src.order(); ++v) {
      const bool image = f[u] != f[v] && dst.adjacent(f[u], f[v]);
      if (src.adjacent(u, v) != image) return false;
    }
  return true;
}

std::pair<Graph, VertexMap> duplicate_vertices(const Graph& g, std::span<const std::uint32_t> copies) {
  require(copies.size() == g.order(), "duplicate_vertices: one multiplicity per vertex");
  VertexMap projection;
  for (Vertex v = 0; v < g.order(); ++v) {
    require(copies[v] >= 1, "duplicate_vertices: multiplicities must be positive");
    projection.insert(projection.end(), copies[v], v);
  }
  check_vertex_count(projection.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < projection.size(); ++u)
    for (Vertex v = u + 1; v < projection.size(); ++v)
      if (projection[u] != projection[v] && g.adjacent(projection[u], projection[v]))
        edges.emplace_back(u, v);
  return {Graph::unlabelled(projection.size(), edges), std::move(projection)};
}

bool is_connected(const Graph& g) {
  require(g.order() >= 1, "is_connected: empty graph");
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbours(u))
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == g.order();
}

}  // namespace otg
