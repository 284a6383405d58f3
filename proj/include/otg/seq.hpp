#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace otg {

using Value = std::uint64_t;

struct TupleLimits {
  std::size_t max_length = 16;
  Value max_value = 0xFFFFFFFFull;
};

/// A strictly increasing, non-empty finite sequence of naturals. Every graph
/// in this library has these as vertices.
class IncreasingTuple {
 public:
  explicit IncreasingTuple(std::vector<Value> values, TupleLimits limits = {});
  IncreasingTuple(std::initializer_list<Value> values);

  std::size_t size() const noexcept { return values_.size(); }
  Value operator[](std::size_t i) const { return values_[i]; }
  std::span<const Value> values() const noexcept { return values_; }
  Value front() const { return values_.front(); }
  Value back() const { return values_.back(); }

  /// Sub-tuple on the inclusive index interval [lo, hi].
  IncreasingTuple slice(std::size_t lo, std::size_t hi) const;

  /// Rendered as "(a,b,c)".
  std::string to_string() const;

  friend bool operator==(const IncreasingTuple&, const IncreasingTuple&) = default;
  friend auto operator<=>(const IncreasingTuple&, const IncreasingTuple&) = default;

 private:
  std::vector<Value> values_;
};

/// Canonical form of the order type of a pair of equal-length tuples: each
/// entry is replaced by its rank inside the sorted union of both images, so
/// equal values share a rank.
struct OrderTypePattern {
  std::size_t n = 0;
  std::vector<std::uint32_t> ranks_a;
  std::vector<std::uint32_t> ranks_b;

  /// Validates the rank invariants (strictly increasing, contiguous 0..m-1).
  static OrderTypePattern from_ranks(std::vector<std::uint32_t> ranks_a,
                                     std::vector<std::uint32_t> ranks_b);

  /// Number of distinct values in the merged image.
  std::size_t merged_size() const;
  bool irreflexive() const { return ranks_a != ranks_b; }

  /// The pair of tuples whose values are the ranks themselves.
  IncreasingTuple representative_a() const;
  IncreasingTuple representative_b() const;

  friend bool operator==(const OrderTypePattern&, const OrderTypePattern&) = default;
  friend auto operator<=>(const OrderTypePattern&, const OrderTypePattern&) = default;
};

OrderTypePattern otp(const IncreasingTuple& c, const IncreasingTuple& d);

/// True iff otp(c, d) == p, without materialising the pattern.
bool realizes(const IncreasingTuple& c, const IncreasingTuple& d,
              const OrderTypePattern& p);

/// Mixed-radix description of a finite lexicographic product order, most
/// significant coordinate first.
class LexFrame {
 public:
  explicit LexFrame(std::vector<Value> radices);

  std::span<const Value> radices() const noexcept { return radices_; }
  std::size_t width() const noexcept { return radices_.size(); }
  /// Product of the radices, i.e. the number of encodable digit strings.
  Value size() const noexcept { return size_; }

  Value encode(std::span<const Value> digits) const;
  std::vector<Value> decode(Value code) const;

  friend bool operator==(const LexFrame&, const LexFrame&) = default;

 private:
  std::vector<Value> radices_;
  Value size_ = 1;
};

IncreasingTuple remap_monotone(const IncreasingTuple& t,
                               const std::function<Value(Value)>& f,
                               TupleLimits limits = {});

/// All increasing r-tuples over 0..n-1 in lexicographic order (empty when
/// r > n).
std::vector<IncreasingTuple> increasing_tuples(std::size_t r, Value n);

/// Binomial coefficient; throws capacity_exceeded on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

}  // namespace otg
