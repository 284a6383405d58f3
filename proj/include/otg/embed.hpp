#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "otg/decomp.hpp"
#include "otg/graph.hpp"
#include "otg/seq.hpp"

namespace otg {

/// The order 0^- < 0 < 1^- < 1 < ... < (alpha-1)^- < alpha-1 < infinity,
/// encoded as 0..2*alpha.
class StarOrder {
 public:
  explicit StarOrder(std::size_t alpha) : alpha_(alpha) {}

  std::size_t alpha() const { return alpha_; }
  Value radix() const { return 2 * alpha_ + 1; }
  Value element(std::size_t beta) const { return 2 * beta + 1; }
  Value predecessor_of(std::size_t beta) const { return 2 * beta; }
  Value zero_minus() const { return 0; }
  Value infinity() const { return 2 * alpha_; }

  /// Immediate lexicographic predecessor of a digit string over the carrier
  /// (decrement with borrow); the all-0^- string is its own predecessor.
  std::vector<Value> predecessor(std::span<const Value> digits) const;

 private:
  std::size_t alpha_;
};

/// One level g_i of the downward induction: values on S_i (ascending) plus
/// the value at infinity. Every value has k digits.
struct GLevel {
  std::vector<std::size_t> domain;
  std::vector<std::vector<Value>> values;
  std::vector<Value> at_infinity;

  const std::vector<Value>& at(std::size_t beta) const;
};

struct GSequence {
  std::size_t k = 0;
  std::size_t alpha = 0;
  /// S_i membership: level[beta] = i with a_beta in C_i.
  std::vector<std::size_t> level_of;
  std::vector<GLevel> levels;  ///< levels[i] is g_i
};

/// Builds g_{k-1}, ..., g_0 from a k-orderly block witness and checks that
/// every level is increasing and that consecutive levels reproduce the
/// a/b comparisons. Throws verification_failed naming the first violation.
GSequence build_g_sequence(const IncreasingTuple& a, const IncreasingTuple& b, std::size_t k,
                           std::span<const ValueBlock> blocks);

enum class SourceKind { lshift, shift };

/// Images of an (L)shift graph's vertices as increasing tuples of
/// lex-encoded naturals.
struct EmbeddingMap {
  SourceKind kind = SourceKind::shift;
  std::size_t k = 0;
  Value n = 0;
  std::variant<Graph, Digraph> source;
  LexFrame frame{std::vector<Value>{}};
  std::vector<IncreasingTuple> images;
};

/// The map LSh_k(n) -> tuples whose arcs all realise otp(a, b).
EmbeddingMap lemma_embedding(const IncreasingTuple& a, const IncreasingTuple& b, std::size_t k,
                             std::span<const ValueBlock> blocks, Value n);

/// Composite map Sh_k(n) -> order-type graph of otp(a, b) assembled from
/// the pieces of an orderly cover. Verified over every arc of LSh_k(n).
EmbeddingMap cover_embedding(const IncreasingTuple& a, const IncreasingTuple& b,
                             const CoverWitness& w, Value n);

/// Every source arc (or edge, in at least one direction) maps to a pair
/// realising `pattern`.
bool verify_embedding(const EmbeddingMap& e, const OrderTypePattern& pattern);

}  // namespace otg
