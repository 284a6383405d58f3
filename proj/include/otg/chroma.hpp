#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "otg/graph.hpp"
#include "otg/seq.hpp"

namespace otg {

struct Coloring {
  std::vector<std::uint32_t> colors;
  std::uint32_t palette = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Total, every colour below the palette, and adjacent vertices differ.
bool verify_coloring(const Graph& g, const Coloring& c);

/// Properness with respect to an explicit edge set only.
bool proper_on_edges(std::span<const Edge> edges, const Coloring& c);

/// First-fit in the given vertex order; palette <= max degree + 1.
Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order);

/// Size of the largest clique found by greedy extension from every vertex.
std::size_t greedy_clique_size(const Graph& g);

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

struct SolverOptions {
  /// Decision nodes (colour assignments) allowed across the whole solve.
  std::uint64_t budget = kDefaultBudget;
  /// Receives one line per bound improvement, when set.
  std::function<void(std::string_view)> progress;
};

struct ChromaticResult {
  bool exact = false;
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  /// Optimal colouring when exact, otherwise the best one found.
  Coloring witness;
  std::uint64_t nodes = 0;

  std::uint32_t chi() const { return upper; }
};

/// Exact chromatic number by DSATUR branch and bound. Deterministic: the
/// witness is the first optimal colouring met in the fixed branching order,
/// with colours renumbered by first appearance.
ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options = {});

struct VertexPiece {
  std::vector<Vertex> vertices;
  Coloring coloring;  ///< Indexed by position inside `vertices`.
};

/// Disjoint-palette union of colourings of the parts of a vertex partition.
Coloring sum_coloring(const Graph& g, std::span<const VertexPiece> pieces);

struct EdgePiece {
  std::vector<Edge> edges;
  Coloring coloring;  ///< Total on V(g); proper for `edges`.
};

/// Colours are tuples of piece colours, flattened in mixed radix.
Coloring product_coloring(const Graph& g, std::span<const EdgePiece> pieces);

/// c composed with f, for a verified homomorphism f: h -> g.
Coloring pullback_coloring(const VertexMap& f, const Graph& h, const Graph& g, const Coloring& c);

struct PatternUnionResult {
  /// Product of the per-pattern chromatic numbers (upper bounds when a
  /// solve was inconclusive).
  std::uint64_t bound = 0;
  bool conclusive = true;
  std::vector<std::uint32_t> pattern_chi;
  Graph union_graph;
  Coloring coloring;
};

/// Graph on increasing length-n tuples over 0..theta-1 whose edges are the
/// union of the order-type graphs of `patterns`, coloured by the product of
/// per-pattern optimal colourings.
PatternUnionResult pattern_union_chromatic(std::size_t length, Value theta,
                                           std::span<const OrderTypePattern> patterns,
                                           const SolverOptions& options = {});

}  // namespace otg
