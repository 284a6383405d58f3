#include <doctest.h>

#include "oracles.hpp"
#include "otg/decomp.hpp"
#include "otg/error.hpp"
#include "otg/suite.hpp"

using namespace otg;

namespace {

using Idx = std::vector<std::size_t>;

std::vector<std::pair<std::size_t, std::size_t>> spans(const std::vector<ConvexClass>& cs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : cs) out.emplace_back(c.lo, c.hi);
  return out;
}

ValueBlock open(Value lo, Value hi) { return {lo, hi, false}; }
ValueBlock closed(Value lo, Value hi) { return {lo, hi, true}; }

}  // namespace

TEST_CASE("sign partition examples") {
  auto s = sign_partition({0, 2, 4}, {1, 3, 5});
  CHECK(s.plus == Idx{0, 1, 2});
  CHECK(s.zero.empty());
  s = sign_partition({0, 5}, {0, 6});
  CHECK(s.zero == Idx{0});
  CHECK(s.plus == Idx{1});
  s = sign_partition({1, 4}, {0, 5});
  CHECK(s.minus == Idx{0});
  CHECK(s.plus == Idx{1});
  CHECK_THROWS_AS(sign_partition({1, 4}, {0}), Error);
}

TEST_CASE("closure examples") {
  CHECK(spans(r_closure({0, 2, 4}, {1, 3, 5})) == oracle::r_classes({0, 2, 4}, {1, 3, 5}));
  CHECK(r_closure({0, 2, 4}, {1, 3, 5}).size() == 3);
  CHECK(closure_generators({0, 2, 4}, {1, 3, 5}).empty());
  const auto one = r_closure({0, 1}, {1, 2});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == ConvexClass{0, 1, Sign::plus});
  const auto sep = r_closure({0, 2}, {3, 5});
  REQUIRE(sep.size() == 1);
  CHECK(sep[0] == ConvexClass{0, 1, Sign::plus});
  try {
    r_closure({0, 1}, {0, 1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("pair must differ") != std::string::npos);
  }
}

TEST_CASE("closure matches the fixpoint oracle on random pairs") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [a, b] = random_pair(rng, {8, 20});
    REQUIRE(spans(r_closure(a, b)) == oracle::r_classes(a, b));
  }
}

TEST_CASE("closure does not depend on the order of the generators") {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [a, b] = random_pair(rng, {8, 32});
    auto pairs = closure_generators(a, b);
    const auto base = convex_closure(a.size(), pairs);
    std::reverse(pairs.begin(), pairs.end());
    CHECK(convex_closure(a.size(), pairs) == base);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
    CHECK(convex_closure(a.size(), pairs) == base);
  }
}

TEST_CASE("class analysis examples") {
  const auto x = analyze_class({0, 1}, {1, 2}, {0, 1, Sign::plus});
  CHECK(x.deltas == Idx{0, 1});
  CHECK(x.n_a() == 2);
  CHECK(x.blocks == std::vector<ValueBlock>{open(0, 1), open(1, 2), closed(2, 2)});
  CHECK(x.zetas == Idx{0, 1});

  const auto y = analyze_class({0, 2}, {3, 5}, {0, 1, Sign::plus});
  CHECK(y.deltas == Idx{0});
  CHECK(y.blocks == std::vector<ValueBlock>{open(0, 3), closed(3, 5)});
  CHECK(y.zetas == Idx{0});

  // Minus class: the construction runs on the swapped pair.
  const auto z = analyze_class({1, 2}, {0, 1}, {0, 1, Sign::minus});
  CHECK(z.swapped);
  CHECK(z.deltas == Idx{0, 1});
  CHECK(z.blocks == std::vector<ValueBlock>{open(0, 1), open(1, 2), closed(2, 2)});

  CHECK_THROWS_AS(analyze_class({0, 5}, {0, 6}, {0, 0, Sign::zero}), Error);
}

TEST_CASE("delta and block construction follow their definitions on random classes") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [a, b] = random_pair(rng, {8, 32});
    for (const auto& c : r_closure(a, b)) {
      if (c.sign == Sign::zero) continue;
      const auto an = analyze_class(a, b, c);
      const IncreasingTuple& x = an.swapped ? b : a;
      const IncreasingTuple& y = an.swapped ? a : b;
      // delta_0 = lo, delta_{m+1} = least index with y[delta_m] <= x[idx].
      Idx want{c.lo};
      for (;;) {
        std::optional<std::size_t> next;
        for (std::size_t i = c.lo; i <= c.hi && !next; ++i)
          if (y[want.back()] <= x[i]) next = i;
        if (!next) break;
        want.push_back(*next);
      }
      REQUIRE(an.deltas == want);
      // Every a (oriented) sits exactly one block below its b.
      for (std::size_t i = c.lo; i <= c.hi; ++i) {
        const auto bx = block_of(an.blocks, x[i]), by = block_of(an.blocks, y[i]);
        REQUIRE(bx.has_value());
        REQUIRE(by.has_value());
        CHECK(*by == *bx + 1);
      }
    }
  }
}

TEST_CASE("is_k_orderly examples") {
  const auto w = is_k_orderly({0, 1}, {1, 2}, 2);
  REQUIRE(w.has_value());
  CHECK(block_of(*w, 0) == 0u);
  CHECK(block_of(*w, 1) == 1u);
  CHECK(block_of(*w, 2) == 2u);
  CHECK_FALSE(is_k_orderly({0, 1}, {1, 2}, 1).has_value());
  CHECK_FALSE(exhaustive_orderly({0, 1}, {1, 2}, 1).has_value());
  const auto s = is_k_orderly({0, 2}, {3, 5}, 1);
  REQUIRE(s.has_value());
  CHECK(*s == std::vector<ValueBlock>{open(0, 3), closed(3, 5)});
  // Reverse direction is never orderly: b below a.
  CHECK_FALSE(is_k_orderly({3, 5}, {0, 2}, 1).has_value());
}

TEST_CASE("exhaustive placement respects its cap") {
  OrderlyOptions small;
  small.exhaustive_cap = 3;
  try {
    exhaustive_orderly({0, 2, 4}, {1, 3, 5}, 1, small);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capacity_exceeded);
  }
}

TEST_CASE("canonical and exhaustive orderliness agree with cut-point search") {
  // The library allows empty blocks, the cut oracle does not. The two
  // notions give the same least k, and the library answer is monotone in k.
  SplitMix64 rng(31);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto [a, b] = random_pair(rng, {6, 16});
    const auto least = oracle::minimal_k_by_cuts(a, b, 6);
    bool seen = false;
    for (std::size_t k = 1; k <= 6; ++k) {
      const bool canonical = is_k_orderly(a, b, k).has_value();
      const bool exhaustive = exhaustive_orderly(a, b, k).has_value();
      REQUIRE(canonical == exhaustive);
      if (canonical) {
        REQUIRE(validate_orderly_blocks(a, b, *is_k_orderly(a, b, k)));
        if (!seen) CHECK(least == k);
        seen = true;
      } else {
        CHECK_FALSE(seen);
      }
      if (oracle::orderly_by_cuts(a, b, k)) CHECK(canonical);
    }
    if (!seen) CHECK((!least.has_value() || *least > 6));
  }
}

TEST_CASE("single plus classes are exactly n_A-orderly") {
  SplitMix64 rng(17);
  int classes = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto [a, b] = random_pair(rng, {8, 32});
    for (const auto& c : r_closure(a, b)) {
      if (c.sign == Sign::zero) continue;
      const auto an = analyze_class(a, b, c);
      IncreasingTuple x = a.slice(c.lo, c.hi), y = b.slice(c.lo, c.hi);
      if (an.swapped) std::swap(x, y);
      CHECK(oracle::minimal_k_by_cuts(x, y, an.n_a() + 1) == an.n_a());
      ++classes;
    }
  }
  CHECK(classes > 1500);
}

TEST_CASE("orderly cover examples") {
  const auto w = orderly_cover({0, 2, 4}, {1, 3, 5});
  REQUIRE(w.pieces.size() == 3);
  for (const auto& p : w.pieces) {
    CHECK(p.kind == PieceKind::ab_orderly);
    CHECK(p.k == 1);
  }
  CHECK(w.k == 1);

  const auto v = orderly_cover({0, 1}, {1, 2});
  REQUIRE(v.pieces.size() == 1);
  CHECK(v.pieces[0].kind == PieceKind::ab_orderly);
  CHECK(v.k == 2);

  const auto e = orderly_cover({0, 5}, {0, 6});
  REQUIRE(e.pieces.size() == 2);
  CHECK(e.pieces[0].kind == PieceKind::equal_singleton);
  CHECK(e.pieces[1].kind == PieceKind::ab_orderly);
  CHECK(e.pieces[1].k == 1);
  CHECK(e.k == 1);

  const auto m = orderly_cover({1, 4}, {0, 2});
  for (const auto& p : m.pieces) CHECK(p.kind == PieceKind::ba_orderly);

  CHECK_THROWS_AS(orderly_cover({0, 1}, {0, 1}), Error);
}

TEST_CASE("verify_cover rejects broken witnesses") {
  const IncreasingTuple a{0, 2, 4}, b{1, 3, 5};
  auto w = orderly_cover(a, b);
  CHECK(verify_cover(a, b, w));
  std::swap(w.pieces[0], w.pieces[1]);
  CHECK_FALSE(verify_cover(a, b, w));

  auto one = orderly_cover({0, 1}, {1, 2});
  one.pieces[0].k = 1;
  one.pieces[0].blocks.clear();
  one.k = 1;
  CHECK_FALSE(verify_cover({0, 1}, {1, 2}, one));

  auto wrong_k = orderly_cover(a, b);
  wrong_k.k = 2;
  CHECK_FALSE(verify_cover(a, b, wrong_k));

  auto flipped = orderly_cover(a, b);
  flipped.pieces[1].kind = PieceKind::ba_orderly;
  flipped.pieces[1].blocks.clear();
  CHECK_FALSE(verify_cover(a, b, flipped));

  auto merged = orderly_cover(a, b);
  merged.pieces[0].hi = 1;
  merged.pieces.erase(merged.pieces.begin() + 1);
  CHECK_FALSE(verify_cover(a, b, merged));
}

TEST_CASE("decomposition invariants on random pairs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [a, b] = random_pair(rng, {8, 32});
    const auto d = decompose(a, b);
    CHECK(verify_cover(a, b, d.cover));
    std::size_t k = 0;
    for (std::size_t i = 0; i < d.classes.size(); ++i) {
      const auto& c = d.classes[i];
      for (std::size_t j = c.lo; j <= c.hi; ++j) CHECK(d.signs.signs[j] == c.sign);
      if (c.sign == Sign::zero) CHECK(c.size() == 1);
      if (d.analyses[i]) k = std::max(k, d.analyses[i]->n_a());
      for (std::size_t j = i + 1; j < d.classes.size(); ++j) {
        CHECK(a[c.hi] < b[d.classes[j].lo]);
        CHECK(b[c.hi] < a[d.classes[j].lo]);
      }
    }
    CHECK(d.cover.k == k);
  }
}

TEST_CASE("minimal orderly k") {
  CHECK(minimal_orderly_k({0, 1}, {1, 2}, 5) == 2u);
  CHECK(minimal_orderly_k({0, 2}, {3, 5}, 5) == 1u);
  CHECK_FALSE(minimal_orderly_k({1, 2}, {0, 1}, 5).has_value());
}
