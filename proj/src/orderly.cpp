// k-orderliness: canonical blocks for single plus classes, exhaustive block
// placement otherwise.
//
// A block partition is read strictly: every b_i sits exactly one block above
// a_i, so no a_i lies in the last block C_k. Blocks may be empty.

#include <algorithm>

#include "otg/decomp.hpp"
#include "otg/error.hpp"

namespace otg {

namespace {

bool all_plus(const IncreasingTuple& a, const IncreasingTuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] < b[i])) return false;
  return true;
}

std::vector<Value> merged_values(const IncreasingTuple& a, const IncreasingTuple& b) {
  std::vector<Value> v(a.values().begin(), a.values().end());
  v.insert(v.end(), b.values().begin(), b.values().end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Turns a non-decreasing block assignment of the sorted merged values into
// value intervals C_0..C_k.
std::vector<ValueBlock> blocks_from_assignment(const std::vector<Value>& values,
                                               const std::vector<std::size_t>& block,
                                               std::size_t k) {
  const std::size_t m = values.size();
  std::vector<ValueBlock> out(k + 1);
  std::vector<std::size_t> first(k + 1, m);
  for (std::size_t j = m; j-- > 0;) first[block[j]] = j;
  for (std::size_t t = 0; t <= k; ++t) {
    if (first[t] == m) continue;
    std::size_t after = first[t];
    while (after < m && block[after] == t) ++after;
    out[t] = after < m ? ValueBlock{values[first[t]], values[after], false}
                       : ValueBlock{values[first[t]], values[m - 1], true};
  }
  // Empty blocks sit at the left end of the next non-empty block.
  Value cursor = values[m - 1];
  for (std::size_t t = k + 1; t-- > 0;) {
    if (first[t] != m) {
      cursor = values[first[t]];
      continue;
    }
    out[t] = ValueBlock{cursor, cursor, false};
  }
  return out;
}

class BlockPlacement {
 public:
  BlockPlacement(const IncreasingTuple& a, const IncreasingTuple& b, std::size_t k)
      : k_(k), values_(merged_values(a, b)), block_(values_.size(), 0),
        forced_by_(values_.size()), holds_a_(values_.size(), false) {
    auto position = [&](Value x) {
      return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), x) -
                                      values_.begin());
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      holds_a_[position(a[i])] = true;
      forced_by_[position(b[i])].push_back(position(a[i]));
    }
  }

  std::size_t merged_size() const { return values_.size(); }

  std::optional<std::vector<ValueBlock>> solve() {
    if (!place(0, 0)) return std::nullopt;
    return blocks_from_assignment(values_, block_, k_);
  }

 private:
  bool place(std::size_t j, std::size_t floor) {
    if (j == values_.size()) return true;
    const std::size_t top = holds_a_[j] ? k_ - 1 : k_;
    for (std::size_t t = floor; t <= top; ++t) {
      bool ok = true;
      for (std::size_t source : forced_by_[j])
        if (block_[source] + 1 != t) ok = false;
      if (!ok) continue;
      block_[j] = t;
      if (place(j + 1, t)) return true;
    }
    return false;
  }

  std::size_t k_;
  std::vector<Value> values_;
  std::vector<std::size_t> block_;
  std::vector<std::vector<std::size_t>> forced_by_;  // b at j needs block(a) + 1
  std::vector<bool> holds_a_;
};

}  // namespace

bool validate_orderly_blocks(const IncreasingTuple& a, const IncreasingTuple& b,
                             std::span<const ValueBlock> blocks) {
  if (a.size() != b.size() || blocks.size() < 2) return false;
  const Value lo = std::min(a.front(), b.front());
  const Value hi = std::max(a.back(), b.back());

  // Non-empty blocks must tile [lo, hi] left to right; only the last may be
  // closed.
  std::optional<Value> cursor;
  bool finished = false;
  for (const auto& block : blocks) {
    if (block.empty()) continue;
    if (finished) return false;
    if (!cursor ? block.lo != lo : block.lo != *cursor) return false;
    if (block.closed) {
      if (block.hi != hi) return false;
      finished = true;
    } else {
      if (block.hi > hi) return false;
      cursor = block.hi;
    }
  }
  if (!finished) return false;

  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ba = block_of(blocks, a[i]);
    const auto bb = block_of(blocks, b[i]);
    if (!ba || !bb || *bb != *ba + 1) return false;
  }
  return true;
}

std::optional<std::vector<ValueBlock>> exhaustive_orderly(const IncreasingTuple& a,
                                                          const IncreasingTuple& b, std::size_t k,
                                                          const OrderlyOptions& options) {
  require(a.size() == b.size(), "is_k_orderly: tuple lengths differ");
  if (k == 0 || !all_plus(a, b)) return std::nullopt;
  BlockPlacement placement(a, b, k);
  if (placement.merged_size() > options.exhaustive_cap)
    fail(ErrorKind::capacity_exceeded,
         "merged image of " + std::to_string(placement.merged_size()) +
             " values exceeds the exhaustive cap of " + std::to_string(options.exhaustive_cap));
  return placement.solve();
}

std::optional<std::vector<ValueBlock>> is_k_orderly(const IncreasingTuple& a,
                                                    const IncreasingTuple& b, std::size_t k,
                                                    const OrderlyOptions& options) {
  require(a.size() == b.size(), "is_k_orderly: tuple lengths differ");
  if (k == 0 || !all_plus(a, b)) return std::nullopt;
  const auto classes = r_closure(a, b);
  if (classes.size() == 1) {
    ClassAnalysis analysis = analyze_class(a, b, classes.front());
    if (analysis.n_a() > k) return std::nullopt;
    const Value top = analysis.blocks.back().hi;
    analysis.blocks.resize(k + 1, ValueBlock{top, top, false});
    return std::move(analysis.blocks);
  }
  return exhaustive_orderly(a, b, k, options);
}

std::optional<std::size_t> minimal_orderly_k(const IncreasingTuple& a, const IncreasingTuple& b,
                                             std::size_t max_k, const OrderlyOptions& options) {
  for (std::size_t k = 1; k <= max_k; ++k)
    if (exhaustive_orderly(a, b, k, options)) return k;
  return std::nullopt;
}

}  // namespace otg
