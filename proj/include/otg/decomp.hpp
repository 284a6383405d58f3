#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "otg/seq.hpp"

namespace otg {

enum class Sign { zero, plus, minus };

const char* to_string(Sign s);

/// Per-index comparison of a pair: zero where a = b, plus where a < b,
/// minus where a > b.
struct SignPartition {
  std::vector<std::size_t> zero;
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  std::vector<Sign> signs;  ///< Indexed by position.
};

SignPartition sign_partition(const IncreasingTuple& a, const IncreasingTuple& b);

/// Inclusive index interval [lo, hi] with a common sign.
struct ConvexClass {
  std::size_t lo = 0;
  std::size_t hi = 0;
  Sign sign = Sign::zero;

  std::size_t size() const { return hi - lo + 1; }
  friend bool operator==(const ConvexClass&, const ConvexClass&) = default;
};

/// Index pairs generating the relation: a_x = b_y, a_x < a_y <= b_x, and
/// b_x < b_y <= a_x.
std::vector<std::pair<std::size_t, std::size_t>> closure_generators(const IncreasingTuple& a,
                                                                    const IncreasingTuple& b);

/// Coarsest-needed interval partition of 0..n-1: the least convex
/// equivalence relation containing the given pairs. Pairs are folded in the
/// order given.
std::vector<std::pair<std::size_t, std::size_t>> convex_closure(
    std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// Classes of the least convex equivalence containing the generators,
/// in index order. Fails if a = b.
std::vector<ConvexClass> r_closure(const IncreasingTuple& a, const IncreasingTuple& b);

/// A value interval [lo, hi) or, when closed, [lo, hi]. [x, x) is empty.
struct ValueBlock {
  Value lo = 0;
  Value hi = 0;
  bool closed = false;

  bool contains(Value x) const { return lo <= x && (closed ? x <= hi : x < hi); }
  bool empty() const { return !closed && lo >= hi; }
  friend bool operator==(const ValueBlock&, const ValueBlock&) = default;
};

/// Block index containing x, if any.
std::optional<std::size_t> block_of(std::span<const ValueBlock> blocks, Value x);

struct ClassAnalysis {
  ConvexClass cls;
  /// The construction ran on (b, a) because the class is a minus class.
  bool swapped = false;
  std::vector<std::size_t> deltas;
  /// gamma_m for m + 1 < n_A.
  std::vector<std::size_t> gammas;
  std::vector<std::size_t> zetas;
  /// C_0 .. C_{n_A}; the last one is closed.
  std::vector<ValueBlock> blocks;

  std::size_t n_a() const { return deltas.size(); }
};

ClassAnalysis analyze_class(const IncreasingTuple& a, const IncreasingTuple& b,
                            const ConvexClass& cls);

struct OrderlyOptions {
  /// Largest merged image handled by exhaustive block placement.
  std::size_t exhaustive_cap = 24;
};

/// Checks that `blocks` (C_0..C_k) is an increasing convex partition of the
/// hull of both images with every b_i exactly one block above a_i.
bool validate_orderly_blocks(const IncreasingTuple& a, const IncreasingTuple& b,
                             std::span<const ValueBlock> blocks);

/// k-orderly witness for <a, b>, if one exists. Single plus-class pairs use
/// the canonical block construction (padded with empty trailing blocks when
/// k > n_A); anything else falls back to exhaustive block placement, which
/// throws capacity_exceeded above the cap.
std::optional<std::vector<ValueBlock>> is_k_orderly(const IncreasingTuple& a,
                                                    const IncreasingTuple& b, std::size_t k,
                                                    const OrderlyOptions& options = {});

/// Exhaustive placement only; ignores the canonical shortcut.
std::optional<std::vector<ValueBlock>> exhaustive_orderly(const IncreasingTuple& a,
                                                          const IncreasingTuple& b, std::size_t k,
                                                          const OrderlyOptions& options = {});

/// Least k >= 1 with an exhaustive witness, searching up to `max_k`.
std::optional<std::size_t> minimal_orderly_k(const IncreasingTuple& a, const IncreasingTuple& b,
                                             std::size_t max_k, const OrderlyOptions& options = {});

enum class PieceKind {
  ab_orderly,      ///< <a|J, b|J> is k-orderly
  ba_orderly,      ///< <b|J, a|J> is k-orderly
  equal_singleton, ///< |J| = 1 and a|J = b|J
};

const char* to_string(PieceKind kind);

struct CoverPiece {
  std::size_t lo = 0;
  std::size_t hi = 0;
  PieceKind kind = PieceKind::equal_singleton;
  std::size_t k = 0;
  /// Blocks for the oriented restricted pair; empty for equal singletons.
  std::vector<ValueBlock> blocks;

  friend bool operator==(const CoverPiece&, const CoverPiece&) = default;
};

struct CoverWitness {
  std::vector<CoverPiece> pieces;
  std::size_t k = 0;

  friend bool operator==(const CoverWitness&, const CoverWitness&) = default;
};

CoverWitness orderly_cover(const IncreasingTuple& a, const IncreasingTuple& b);

/// First violated clause of the covering definition, or nullopt when the
/// witness is valid.
std::optional<std::string> cover_defect(const IncreasingTuple& a, const IncreasingTuple& b,
                                        const CoverWitness& w);

inline bool verify_cover(const IncreasingTuple& a, const IncreasingTuple& b,
                         const CoverWitness& w) {
  return !cover_defect(a, b, w).has_value();
}

/// Everything the decomposition computes for a pair.
struct Decomposition {
  SignPartition signs;
  std::vector<ConvexClass> classes;
  std::vector<std::optional<ClassAnalysis>> analyses;  ///< nullopt for zero classes
  CoverWitness cover;
};

Decomposition decompose(const IncreasingTuple& a, const IncreasingTuple& b);

}  // namespace otg
