#include "otg/embed.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "otg/error.hpp"

namespace otg {

std::vector<Value> StarOrder::predecessor(std::span<const Value> digits) const {
  std::vector<Value> out(digits.begin(), digits.end());
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] == zero_minus()) continue;
    --out[i];
    for (std::size_t j = i + 1; j < out.size(); ++j) out[j] = infinity();
    return out;
  }
  return out;
}

const std::vector<Value>& GLevel::at(std::size_t beta) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), beta);
  require(it != domain.end() && *it == beta, "g level is not defined at this index");
  return values[static_cast<std::size_t>(it - domain.begin())];
}

namespace {

std::string digits_to_string(std::span<const Value> digits) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
  out << ')';
  return out.str();
}

int compare(Value x, Value y) { return x < y ? -1 : (x > y ? 1 : 0); }
int compare(const std::vector<Value>& x, const std::vector<Value>& y) {
  return x < y ? -1 : (x > y ? 1 : 0);
}

std::vector<Value> extend(std::vector<Value> prefix, Value digit, std::size_t k) {
  prefix.push_back(digit);
  prefix.resize(k, 0);
  return prefix;
}

}  // namespace

GSequence build_g_sequence(const IncreasingTuple& a, const IncreasingTuple& b, std::size_t k,
                           std::span<const ValueBlock> blocks) {
  require(k >= 1, "build_g_sequence: k must be positive");
  require(blocks.size() == k + 1 && validate_orderly_blocks(a, b, blocks),
          "build_g_sequence: blocks are not a " + std::to_string(k) + "-orderly witness");
  const StarOrder star(a.size());
  GSequence g;
  g.k = k;
  g.alpha = a.size();
  g.levels.resize(k);
  for (std::size_t beta = 0; beta < a.size(); ++beta) {
    const std::size_t level = *block_of(blocks, a[beta]);
    g.level_of.push_back(level);
    g.levels[level].domain.push_back(beta);
  }

  GLevel& top = g.levels[k - 1];
  for (std::size_t beta : top.domain) top.values.push_back(extend({}, star.element(beta), k));
  top.at_infinity = extend({}, star.infinity(), k);

  for (std::size_t i = k - 1; i >= 1; --i) {
    const GLevel& upper = g.levels[i];
    GLevel& lower = g.levels[i - 1];
    // g_i carries k - i significant leading digits; g_{i-1} appends one more.
    const std::size_t significant = k - i;
    auto prefix = [&](const std::vector<Value>& v) {
      return std::vector<Value>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(significant));
    };
    for (std::size_t beta : lower.domain) {
      auto hit = std::find_if(upper.domain.begin(), upper.domain.end(),
                              [&](std::size_t gamma) { return b[beta] <= a[gamma]; });
      if (hit == upper.domain.end()) {
        lower.values.push_back(extend(prefix(upper.at_infinity), star.element(beta), k));
        continue;
      }
      const auto& g_gamma = upper.values[static_cast<std::size_t>(hit - upper.domain.begin())];
      if (a[*hit] == b[beta])
        lower.values.push_back(g_gamma);
      else
        lower.values.push_back(extend(star.predecessor(prefix(g_gamma)), star.element(beta), k));
    }
    lower.at_infinity = extend(prefix(upper.at_infinity), star.infinity(), k);
  }

  for (std::size_t i = 0; i < k; ++i) {
    const GLevel& level = g.levels[i];
    for (std::size_t j = 0; j < level.values.size(); ++j) {
      const auto& next = j + 1 < level.values.size() ? level.values[j + 1] : level.at_infinity;
      if (!(level.values[j] < next))
        fail(ErrorKind::verification_failed,
             "g_" + std::to_string(i) + " is not increasing after index " +
                 std::to_string(level.domain[j]));
    }
  }
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t x = 0; x < g.levels[i].domain.size(); ++x)
      for (std::size_t y = 0; y < g.levels[i - 1].domain.size(); ++y) {
        const std::size_t b1 = g.levels[i].domain[x];
        const std::size_t b2 = g.levels[i - 1].domain[y];
        const int want = compare(a[b1], b[b2]);
        const int got = compare(g.levels[i].values[x], g.levels[i - 1].values[y]);
        if (want != got)
          fail(ErrorKind::verification_failed,
               "order-type transfer fails at (i=" + std::to_string(i) + ", beta1=" +
                   std::to_string(b1) + ", beta2=" + std::to_string(b2) + "): a vs b compares " +
                   std::to_string(want) + " but g_i" + digits_to_string(g.levels[i].values[x]) +
                   " vs g_{i-1}" + digits_to_string(g.levels[i - 1].values[y]) + " compares " +
                   std::to_string(got));
      }
  return g;
}

namespace {

IncreasingTuple make_image(std::vector<Value> codes, const LexFrame& frame, const IncreasingTuple& eta) {
  try {
    const std::size_t len = codes.size();
    return IncreasingTuple(std::move(codes), TupleLimits{std::max<std::size_t>(len, 1), frame.size() - 1});
  } catch (const Error& e) {
    fail(ErrorKind::verification_failed, "image of " + eta.to_string() + " is invalid: " + e.what());
  }
}

void verify_arcs(const Digraph& source, const std::vector<IncreasingTuple>& images,
                 const OrderTypePattern& pattern) {
  for (auto [u, v] : source.arcs())
    if (!realizes(images[u], images[v], pattern))
      fail(ErrorKind::verification_failed,
           "arc " + source.label(u).to_string() + " -> " + source.label(v).to_string() +
               " maps to " + images[u].to_string() + ", " + images[v].to_string() +
               " which does not realise the pattern");
}

}  // namespace

EmbeddingMap lemma_embedding(const IncreasingTuple& a, const IncreasingTuple& b, std::size_t k,
                             std::span<const ValueBlock> blocks, Value n) {
  require(n >= 2, "lemma_embedding: N must be at least 2");
  const GSequence g = build_g_sequence(a, b, k, blocks);
  const StarOrder star(a.size());

  std::vector<Value> radices{n};
  radices.insert(radices.end(), k, star.radix());
  EmbeddingMap e{SourceKind::lshift, k, n, detail::lshift_digraph_unchecked(k, n),
                 LexFrame(std::move(radices)), {}};
  const Digraph& source = std::get<Digraph>(e.source);

  std::vector<Value> digits(k + 1);
  for (const auto& eta : source.labels()) {
    std::vector<Value> codes;
    for (std::size_t beta = 0; beta < a.size(); ++beta) {
      const std::size_t level = g.level_of[beta];
      digits[0] = eta[level];
      const auto& gv = g.levels[level].at(beta);
      std::copy(gv.begin(), gv.end(), digits.begin() + 1);
      codes.push_back(e.frame.encode(digits));
    }
    e.images.push_back(make_image(std::move(codes), e.frame, eta));
  }
  verify_arcs(source, e.images, otp(a, b));
  return e;
}

EmbeddingMap cover_embedding(const IncreasingTuple& a, const IncreasingTuple& b,
                             const CoverWitness& w, Value n) {
  require(n >= 2, "cover_embedding: N must be at least 2");
  if (auto defect = cover_defect(a, b, w))
    fail(ErrorKind::invalid_argument, "cover_embedding: invalid cover witness: " + *defect);

  const std::size_t len = a.size();
  const std::size_t k = w.k;

  struct PieceMap {
    const CoverPiece* piece;
    std::optional<GSequence> g;
  };
  std::vector<PieceMap> maps;
  for (const auto& piece : w.pieces) {
    PieceMap pm{&piece, std::nullopt};
    if (piece.kind != PieceKind::equal_singleton) {
      const bool ab = piece.kind == PieceKind::ab_orderly;
      const IncreasingTuple sa = a.slice(piece.lo, piece.hi), sb = b.slice(piece.lo, piece.hi);
      const IncreasingTuple& x = ab ? sa : sb;
      const IncreasingTuple& y = ab ? sb : sa;
      std::vector<ValueBlock> blocks = piece.blocks;
      if (blocks.empty()) blocks = *is_k_orderly(x, y, piece.k);
      pm.g = build_g_sequence(x, y, piece.k, blocks);
    }
    maps.push_back(std::move(pm));
  }

  std::vector<Value> radices{len, n};
  radices.insert(radices.end(), k, 2 * len + 1);
  const Digraph arcs = detail::lshift_digraph_unchecked(k, n);
  EmbeddingMap e{SourceKind::shift, k, n, arcs.symmetrize(), LexFrame(std::move(radices)), {}};

  std::vector<Value> digits(k + 2);
  for (const auto& eta : arcs.labels()) {
    std::vector<Value> codes;
    for (std::size_t p = 0; p < maps.size(); ++p) {
      const CoverPiece& piece = *maps[p].piece;
      std::vector<Value> local_eta;
      if (maps[p].g) {
        // Project onto the first k_e coordinates; B pieces also reverse.
        local_eta.assign(eta.values().begin(), eta.values().begin() + static_cast<std::ptrdiff_t>(piece.k));
        if (piece.kind == PieceKind::ba_orderly) {
          const IncreasingTuple reversed = reverse_tuple(IncreasingTuple(local_eta, TupleLimits{k, n}), n);
          local_eta.assign(reversed.values().begin(), reversed.values().end());
        }
      }
      for (std::size_t beta = piece.lo; beta <= piece.hi; ++beta) {
        std::fill(digits.begin(), digits.end(), 0);
        digits[0] = p;
        if (maps[p].g) {
          const GSequence& g = *maps[p].g;
          const std::size_t local = beta - piece.lo;
          const std::size_t level = g.level_of[local];
          digits[1] = local_eta[level];
          const auto& gv = g.levels[level].at(local);
          std::copy(gv.begin(), gv.end(), digits.begin() + 2);
        }
        codes.push_back(e.frame.encode(digits));
      }
    }
    e.images.push_back(make_image(std::move(codes), e.frame, eta));
  }
  const OrderTypePattern pattern = otp(a, b);
  verify_arcs(arcs, e.images, pattern);
  if (!verify_embedding(e, pattern))
    fail(ErrorKind::verification_failed, "cover_embedding: shift-graph edge check failed");
  return e;
}

bool verify_embedding(const EmbeddingMap& e, const OrderTypePattern& pattern) {
  return std::visit(
      [&](const auto& source) {
        if (e.images.size() != source.order()) return false;
        using Source = std::decay_t<decltype(source)>;
        if constexpr (std::is_same_v<Source, Digraph>) {
          return std::all_of(source.arcs().begin(), source.arcs().end(), [&](const Edge& arc) {
            return realizes(e.images[arc.first], e.images[arc.second], pattern);
          });
        } else {
          return std::all_of(source.edges().begin(), source.edges().end(), [&](const Edge& edge) {
            return realizes(e.images[edge.first], e.images[edge.second], pattern) ||
                   realizes(e.images[edge.second], e.images[edge.first], pattern);
          });
        }
      },
      e.source);
}

}  // namespace otg
