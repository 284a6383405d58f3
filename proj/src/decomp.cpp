#include "otg/decomp.hpp"

#include <algorithm>
#include <map>

#include "otg/error.hpp"

namespace otg {

const char* to_string(Sign s) {
  switch (s) {
    case Sign::zero: return "zero";
    case Sign::plus: return "plus";
    case Sign::minus: return "minus";
  }
  return "?";
}

const char* to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::ab_orderly: return "A";
    case PieceKind::ba_orderly: return "B";
    case PieceKind::equal_singleton: return "equal";
  }
  return "?";
}

namespace {
void require_same_length(const IncreasingTuple& a, const IncreasingTuple& b) {
  require(a.size() == b.size(), "tuple lengths differ (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
}
}  // namespace

SignPartition sign_partition(const IncreasingTuple& a, const IncreasingTuple& b) {
  require_same_length(a, b);
  SignPartition out;
  out.signs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) {
      out.zero.push_back(i);
      out.signs.push_back(Sign::zero);
    } else if (a[i] < b[i]) {
      out.plus.push_back(i);
      out.signs.push_back(Sign::plus);
    } else {
      out.minus.push_back(i);
      out.signs.push_back(Sign::minus);
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> closure_generators(const IncreasingTuple& a,
                                                                    const IncreasingTuple& b) {
  require_same_length(a, b);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool shared = a[x] == b[y];
      const bool a_inside = a[x] < a[y] && a[y] <= b[x];
      const bool b_inside = b[x] < b[y] && b[y] <= a[x];
      if (shared || a_inside || b_inside) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> convex_closure(
    std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  // Disjoint intervals keyed by their left end; each pair forces the whole
  // interval between its ends into one class.
  std::map<std::size_t, std::size_t> merged;
  for (auto [x, y] : pairs) {
    require(x < n && y < n, "convex_closure: index out of range");
    std::size_t lo = std::min(x, y), hi = std::max(x, y);
    if (lo == hi) continue;
    auto it = merged.upper_bound(lo);
    if (it != merged.begin() && std::prev(it)->second >= lo) --it;
    while (it != merged.end() && it->first <= hi) {
      lo = std::min(lo, it->first);
      hi = std::max(hi, it->second);
      it = merged.erase(it);
    }
    merged.emplace(lo, hi);
  }
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  std::size_t next = 0;
  for (auto [lo, hi] : merged) {
    for (; next < lo; ++next) classes.emplace_back(next, next);
    classes.emplace_back(lo, hi);
    next = hi + 1;
  }
  for (; next < n; ++next) classes.emplace_back(next, next);
  return classes;
}

std::vector<ConvexClass> r_closure(const IncreasingTuple& a, const IncreasingTuple& b) {
  require_same_length(a, b);
  if (a == b) fail(ErrorKind::invalid_argument, "pair must differ");
  const auto signs = sign_partition(a, b);
  const auto generators = closure_generators(a, b);
  std::vector<ConvexClass> classes;
  for (auto [lo, hi] : convex_closure(a.size(), generators)) {
    ConvexClass cls{lo, hi, signs.signs[lo]};
    for (std::size_t i = lo; i <= hi; ++i)
      if (signs.signs[i] != cls.sign)
        fail(ErrorKind::internal, "closure class [" + std::to_string(lo) + "," +
                                      std::to_string(hi) + "] mixes signs");
    if (cls.sign == Sign::zero && lo != hi)
      fail(ErrorKind::internal, "closure class of equal coordinates is not a singleton");
    classes.push_back(cls);
  }
  return classes;
}

std::optional<std::size_t> block_of(std::span<const ValueBlock> blocks, Value x) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(x)) return i;
  return std::nullopt;
}

ClassAnalysis analyze_class(const IncreasingTuple& a, const IncreasingTuple& b,
                            const ConvexClass& cls) {
  require_same_length(a, b);
  require(cls.lo <= cls.hi && cls.hi < a.size(), "analyze_class: class out of range");
  if (cls.sign == Sign::zero) fail(ErrorKind::invalid_argument, "analyze_class: zero-sign class");

  ClassAnalysis out;
  out.cls = cls;
  out.swapped = cls.sign == Sign::minus;
  // The minus construction is the plus construction on the swapped pair.
  const IncreasingTuple& x = out.swapped ? b : a;
  const IncreasingTuple& y = out.swapped ? a : b;
  for (std::size_t i = cls.lo; i <= cls.hi; ++i)
    require(x[i] < y[i], "analyze_class: class is not sign-pure");

  out.deltas.push_back(cls.lo);
  while (true) {
    const Value bound = y[out.deltas.back()];
    std::size_t next = out.deltas.back() + 1;
    while (next <= cls.hi && x[next] < bound) ++next;
    if (next > cls.hi) break;
    out.deltas.push_back(next);
  }
  const std::size_t n_a = out.deltas.size();
  const auto& d = out.deltas;

  out.blocks.push_back({x[d[0]], y[d[0]], false});
  for (std::size_t m = 1; m < n_a; ++m) out.blocks.push_back({y[d[m - 1]], y[d[m]], false});
  out.blocks.push_back({y[d[n_a - 1]], std::max(x[cls.hi], y[cls.hi]), true});

  for (std::size_t m = 0; m + 1 < n_a; ++m) {
    if (y[d[m]] == x[d[m + 1]]) {
      out.gammas.push_back(d[m + 1]);
      continue;
    }
    std::optional<std::size_t> found;
    for (std::size_t e = d[m] + 1; e < d[m + 1] && !found; ++e)
      if (x[d[m]] < x[e] && x[e] <= y[d[m]] && y[d[m]] <= x[d[m + 1]] && x[d[m + 1]] <= y[e])
        found = e;
    if (!found)
      fail(ErrorKind::internal, "gamma search failed between deltas " + std::to_string(d[m]) +
                                    " and " + std::to_string(d[m + 1]));
    out.gammas.push_back(*found);
  }

  std::vector<std::size_t> pool;
  for (std::size_t m = 0; m + 1 < n_a; ++m) {
    pool.push_back(d[m]);
    pool.push_back(out.gammas[m]);
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  out.zetas.push_back(d[0]);
  while (out.zetas.size() < n_a) {
    const std::size_t z = out.zetas.back();
    std::optional<std::size_t> pick;
    for (auto it = pool.rbegin(); it != pool.rend() && !pick; ++it)
      if (x[z] < x[*it] && x[*it] <= y[z]) pick = *it;
    if (!pick)
      fail(ErrorKind::internal, "zeta sequence ended after " + std::to_string(out.zetas.size()) +
                                    " of " + std::to_string(n_a) + " terms");
    out.zetas.push_back(*pick);
  }
  return out;
}

CoverWitness orderly_cover(const IncreasingTuple& a, const IncreasingTuple& b) {
  CoverWitness w;
  for (const auto& cls : r_closure(a, b)) {
    CoverPiece piece{cls.lo, cls.hi, PieceKind::equal_singleton, 0, {}};
    if (cls.sign != Sign::zero) {
      ClassAnalysis analysis = analyze_class(a, b, cls);
      piece.kind = analysis.swapped ? PieceKind::ba_orderly : PieceKind::ab_orderly;
      piece.k = analysis.n_a();
      piece.blocks = std::move(analysis.blocks);
    }
    w.k = std::max(w.k, piece.k);
    w.pieces.push_back(std::move(piece));
  }
  return w;
}

std::optional<std::string> cover_defect(const IncreasingTuple& a, const IncreasingTuple& b,
                                        const CoverWitness& w) {
  if (a.size() != b.size()) return "tuple lengths differ";
  const std::size_t n = a.size();
  if (w.pieces.empty()) return "no pieces";
  if (w.k < 1) return "k must be positive";

  std::size_t expected_lo = 0, max_k = 0;
  for (std::size_t e = 0; e < w.pieces.size(); ++e) {
    const auto& p = w.pieces[e];
    const std::string where = "piece " + std::to_string(e);
    if (p.lo != expected_lo || p.hi < p.lo || p.hi >= n)
      return where + " breaks the increasing convex partition";
    expected_lo = p.hi + 1;

    const IncreasingTuple sa = a.slice(p.lo, p.hi), sb = b.slice(p.lo, p.hi);
    const bool equal_clause = p.lo == p.hi && sa == sb;
    auto oriented = [&](bool ab) -> bool {
      const IncreasingTuple& x = ab ? sa : sb;
      const IncreasingTuple& y = ab ? sb : sa;
      const bool claimed = ab ? p.kind == PieceKind::ab_orderly : p.kind == PieceKind::ba_orderly;
      if (claimed && !p.blocks.empty())
        return p.k >= 1 && p.blocks.size() == p.k + 1 && validate_orderly_blocks(x, y, p.blocks);
      return is_k_orderly(x, y, claimed ? p.k : w.k).has_value();
    };
    const bool ab_clause = oriented(true);
    const bool ba_clause = oriented(false);

    switch (p.kind) {
      case PieceKind::equal_singleton:
        if (!equal_clause) return where + " is not an equal singleton";
        break;
      case PieceKind::ab_orderly:
        if (!ab_clause) return where + " is not " + std::to_string(p.k) + "-orderly as <a,b>";
        break;
      case PieceKind::ba_orderly:
        if (!ba_clause) return where + " is not " + std::to_string(p.k) + "-orderly as <b,a>";
        break;
    }
    if (int(equal_clause) + int(ab_clause) + int(ba_clause) != 1)
      return where + " satisfies more than one clause";
    if (p.kind != PieceKind::equal_singleton) {
      if (p.k < 1 || p.k > w.k) return where + " has k outside 1..k";
      max_k = std::max(max_k, p.k);
    }
  }
  if (expected_lo != n) return "pieces do not cover all indices";
  if (max_k != w.k) return "k is not the maximum piece k";

  for (std::size_t e = 0; e < w.pieces.size(); ++e)
    for (std::size_t f = e + 1; f < w.pieces.size(); ++f) {
      const auto& p = w.pieces[e];
      const auto& q = w.pieces[f];
      if (!(a[p.hi] < b[q.lo]) || !(b[p.hi] < a[q.lo]))
        return "images of pieces " + std::to_string(e) + " and " + std::to_string(f) +
               " are not separated";
    }
  return std::nullopt;
}

Decomposition decompose(const IncreasingTuple& a, const IncreasingTuple& b) {
  Decomposition out;
  out.signs = sign_partition(a, b);
  out.classes = r_closure(a, b);
  for (const auto& cls : out.classes)
    out.analyses.push_back(cls.sign == Sign::zero ? std::nullopt
                                                  : std::optional(analyze_class(a, b, cls)));
  out.cover = orderly_cover(a, b);
  return out;
}

}  // namespace otg
