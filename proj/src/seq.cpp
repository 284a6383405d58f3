#include "otg/seq.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "otg/error.hpp"

namespace otg {

IncreasingTuple::IncreasingTuple(std::vector<Value> values, TupleLimits limits)
    : values_(std::move(values)) {
  require(!values_.empty(), "increasing tuple must be non-empty");
  require(values_.size() <= limits.max_length,
          "tuple length " + std::to_string(values_.size()) + " exceeds cap " +
              std::to_string(limits.max_length));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    require(values_[i] <= limits.max_value,
            "tuple value " + std::to_string(values_[i]) + " exceeds cap " +
                std::to_string(limits.max_value));
    if (i > 0)
      require(values_[i - 1] < values_[i],
              "tuple is not strictly increasing at position " + std::to_string(i));
  }
}

IncreasingTuple::IncreasingTuple(std::initializer_list<Value> values)
    : IncreasingTuple(std::vector<Value>(values)) {}

IncreasingTuple IncreasingTuple::slice(std::size_t lo, std::size_t hi) const {
  require(lo <= hi && hi < values_.size(), "slice out of range");
  return IncreasingTuple(std::vector<Value>(values_.begin() + lo, values_.begin() + hi + 1),
                         TupleLimits{values_.size(), std::numeric_limits<Value>::max()});
}

std::string IncreasingTuple::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) out << (i ? "," : "") << values_[i];
  out << ')';
  return out.str();
}

OrderTypePattern OrderTypePattern::from_ranks(std::vector<std::uint32_t> ranks_a,
                                              std::vector<std::uint32_t> ranks_b) {
  require(!ranks_a.empty() && ranks_a.size() == ranks_b.size(),
          "pattern rank sequences must be non-empty and of equal length");
  for (std::size_t i = 1; i < ranks_a.size(); ++i)
    require(ranks_a[i - 1] < ranks_a[i] && ranks_b[i - 1] < ranks_b[i],
            "pattern ranks must be strictly increasing");
  std::vector<std::uint32_t> merged(ranks_a);
  merged.insert(merged.end(), ranks_b.begin(), ranks_b.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (std::size_t i = 0; i < merged.size(); ++i)
    require(merged[i] == i, "pattern ranks must form a contiguous segment 0..m-1");
  OrderTypePattern p;
  p.n = ranks_a.size();
  p.ranks_a = std::move(ranks_a);
  p.ranks_b = std::move(ranks_b);
  return p;
}

std::size_t OrderTypePattern::merged_size() const {
  if (n == 0) return 0;
  return std::max(ranks_a.back(), ranks_b.back()) + std::size_t{1};
}

namespace {
IncreasingTuple tuple_of_ranks(const std::vector<std::uint32_t>& ranks) {
  return IncreasingTuple(std::vector<Value>(ranks.begin(), ranks.end()),
                         TupleLimits{ranks.size(), std::numeric_limits<Value>::max()});
}
}  // namespace

IncreasingTuple OrderTypePattern::representative_a() const { return tuple_of_ranks(ranks_a); }
IncreasingTuple OrderTypePattern::representative_b() const { return tuple_of_ranks(ranks_b); }

OrderTypePattern otp(const IncreasingTuple& c, const IncreasingTuple& d) {
  require(c.size() == d.size(), "otp: tuple lengths differ (" + std::to_string(c.size()) +
                                    " vs " + std::to_string(d.size()) + ")");
  OrderTypePattern p;
  p.n = c.size();
  p.ranks_a.resize(p.n);
  p.ranks_b.resize(p.n);
  // Both inputs are sorted, so a single merge assigns the shared ranks.
  std::size_t i = 0, j = 0;
  std::uint32_t rank = 0;
  while (i < p.n || j < p.n) {
    if (j == p.n || (i < p.n && c[i] < d[j])) {
      p.ranks_a[i++] = rank++;
    } else if (i == p.n || d[j] < c[i]) {
      p.ranks_b[j++] = rank++;
    } else {
      p.ranks_a[i++] = rank;
      p.ranks_b[j++] = rank++;
    }
  }
  return p;
}

bool realizes(const IncreasingTuple& c, const IncreasingTuple& d, const OrderTypePattern& p) {
  if (c.size() != p.n || d.size() != p.n) return false;
  std::size_t i = 0, j = 0;
  std::uint32_t rank = 0;
  while (i < p.n || j < p.n) {
    if (j == p.n || (i < p.n && c[i] < d[j])) {
      if (p.ranks_a[i++] != rank++) return false;
    } else if (i == p.n || d[j] < c[i]) {
      if (p.ranks_b[j++] != rank++) return false;
    } else {
      if (p.ranks_a[i++] != rank || p.ranks_b[j++] != rank) return false;
      ++rank;
    }
  }
  return true;
}

LexFrame::LexFrame(std::vector<Value> radices) : radices_(std::move(radices)) {
  for (Value r : radices_) {
    require(r >= 1, "lex frame radices must be at least 1");
    if (size_ > std::numeric_limits<Value>::max() / r)
      fail(ErrorKind::capacity_exceeded, "lex frame does not fit in 64 bits");
    size_ *= r;
  }
}

Value LexFrame::encode(std::span<const Value> digits) const {
  require(digits.size() == radices_.size(),
          "lex_encode: expected " + std::to_string(radices_.size()) + " digits, got " +
              std::to_string(digits.size()));
  Value code = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    require(digits[i] < radices_[i], "lex_encode: digit " + std::to_string(digits[i]) +
                                         " out of range for radix " +
                                         std::to_string(radices_[i]));
    code = code * radices_[i] + digits[i];
  }
  return code;
}

std::vector<Value> LexFrame::decode(Value code) const {
  require(code < size_, "lex_decode: code out of range");
  std::vector<Value> digits(radices_.size());
  for (std::size_t i = radices_.size(); i-- > 0;) {
    digits[i] = code % radices_[i];
    code /= radices_[i];
  }
  return digits;
}

IncreasingTuple remap_monotone(const IncreasingTuple& t, const std::function<Value(Value)>& f,
                               TupleLimits limits) {
  std::vector<Value> image;
  image.reserve(t.size());
  for (Value v : t.values()) image.push_back(f(v));
  return IncreasingTuple(std::move(image), limits);
}

std::vector<IncreasingTuple> increasing_tuples(std::size_t r, Value n) {
  std::vector<IncreasingTuple> out;
  if (r == 0 || r > n) return out;
  out.reserve(binomial(n, r));
  const TupleLimits limits{r, std::numeric_limits<Value>::max()};
  std::vector<Value> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.emplace_back(cur, limits);
    // Advance to the lexicographic successor.
    std::size_t i = r;
    while (i-- > 0) {
      if (cur[i] < n - (r - i)) break;
      if (i == 0) return out;
    }
    ++cur[i];
    for (std::size_t j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) is divisible by i since acc = C(n - r + i - 1, i - 1).
    std::uint64_t scaled = 0;
    if (__builtin_mul_overflow(acc, n - r + i, &scaled))
      fail(ErrorKind::capacity_exceeded, "binomial coefficient overflows 64 bits");
    acc = scaled / i;
  }
  return acc;
}

}  // namespace otg
