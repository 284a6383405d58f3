#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "otg/chroma.hpp"
#include "otg/decomp.hpp"
#include "otg/embed.hpp"
#include "otg/graph.hpp"
#include "otg/seq.hpp"

namespace otg::io {

using json = nlohmann::json;
using AnyGraph = std::variant<Graph, Digraph>;

json to_json(const IncreasingTuple& t);
IncreasingTuple tuple_from_json(const json& j, TupleLimits limits = {});
json to_json(const OrderTypePattern& p);
OrderTypePattern pattern_from_json(const json& j);

/// {"kind": "graph", "directed": bool, "vertices": [...], "edges": [[i, j], ...]}
json to_json(const Graph& g);
json to_json(const Digraph& g);
AnyGraph graph_from_json(const json& j);

std::string to_dot(const Graph& g);
std::string to_dot(const Digraph& g);
/// One line per vertex: index, label, neighbours (successors when directed).
std::string to_table(const AnyGraph& g);

json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json chi_report(const ChromaticResult& r);
json decomposition_report(const IncreasingTuple& a, const IncreasingTuple& b,
                          const Decomposition& d);
json embedding_report(const IncreasingTuple& a, const IncreasingTuple& b, const EmbeddingMap& e,
                      const CoverWitness& w, bool verified);

CoverWitness cover_from_json(const json& j);

/// Parses text as JSON; malformed input throws parse_error.
json parse(const std::string& text);
/// Compact single-line rendering used by every machine-readable output.
std::string dump(const json& j);

struct VerifyOutcome {
  bool ok = false;
  /// Set when a re-solve ran out of budget; ok is then false.
  bool inconclusive = false;
  std::string message;
};

/// Re-checks a serialised artifact, dispatching on its "kind". Colourings
/// and chi reports need the graph they refer to.
VerifyOutcome verify_artifact(const json& artifact, const std::optional<AnyGraph>& graph,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace otg::io
