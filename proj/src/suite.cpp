#include "otg/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "otg/decomp.hpp"
#include "otg/embed.hpp"
#include "otg/error.hpp"

namespace otg {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 outer(seed);
  const std::uint64_t base = outer.next();
  SplitMix64 inner(base ^ (index * 0xd1b54a32d192ed03ull));
  return inner.next();
}

std::pair<IncreasingTuple, IncreasingTuple> random_pair(SplitMix64& rng, const PairCaps& caps) {
  require(caps.max_length >= 1, "random_pair: max_length must be positive");
  require(caps.max_value >= 2, "random_pair: max_value must be at least 2");
  for (;;) {
    const std::size_t len = 1 + rng.below(caps.max_length);
    std::vector<Value> pool(2 * len);
    for (auto& v : pool) v = rng.below(caps.max_value);
    std::sort(pool.begin(), pool.end());
    std::vector<std::size_t> positions(2 * len);
    for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
    for (std::size_t i = 0; i < len; ++i)
      std::swap(positions[i], positions[i + rng.below(positions.size() - i)]);
    std::vector<bool> to_a(2 * len, false);
    for (std::size_t i = 0; i < len; ++i) to_a[positions[i]] = true;
    std::vector<Value> a, b;
    for (std::size_t i = 0; i < pool.size(); ++i) (to_a[i] ? a : b).push_back(pool[i]);
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) continue;
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) continue;
    if (a == b) continue;
    return {IncreasingTuple(std::move(a)), IncreasingTuple(std::move(b))};
  }
}

namespace {

enum Check : std::size_t {
  kOtpInvariance,
  kOtpReflexive,
  kClosureConfluence,
  kSignPurity,
  kZeroSingletons,
  kClassSeparation,
  kBlockShift,
  kZetaInequalities,
  kGammaSearch,
  kOrderlyOracle,
  kCoverValid,
  kCoverK,
  kDagger,
  kEmbedding,
  kArcInjectivity,
  kMonotoneAmbience,
  kOrderTypeGraph,
  kCheckCount,
};

}  // namespace

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "otp_monotone_invariance", "otp_reflexive",     "closure_confluence",
      "sign_purity",             "zero_singletons",   "class_separation",
      "block_shift",             "zeta_inequalities", "gamma_search",
      "orderly_oracle",          "cover_valid",       "cover_k_is_max_n_a",
      "g_sequence_transfer",     "cover_embedding",   "arc_injectivity",
      "monotone_ambience",       "order_type_graph_symmetric",
  };
  return names;
}

void validate_suite_config(const SuiteConfig& config) {
  require(config.caps.max_length >= 1 && config.caps.max_length <= 10,
          "suite: max length must be in 1..10");
  require(config.caps.max_value >= 2 && config.caps.max_value <= 1'000'000,
          "suite: max value must be in 2..1000000");
  require(config.max_n >= 3 && config.max_n <= 8, "suite: max N must be in 3..8");
  require(config.threads >= 1 && config.threads <= 256, "suite: threads must be in 1..256");
}

namespace {

struct CaseResult {
  std::array<std::uint64_t, kCheckCount> checked{};
  std::vector<SuiteFailure> failures;
};

class CaseRunner {
 public:
  CaseRunner(std::uint64_t index, const IncreasingTuple& a, const IncreasingTuple& b,
             SplitMix64& rng, const SuiteConfig& config)
      : index_(index), a_(a), b_(b), rng_(rng), config_(config) {}

  CaseResult run() {
    check(kOtpInvariance, [&] { return otp_invariance(); });
    check(kOtpReflexive, [&] { return expect(otp(a_, a_).ranks_a == otp(a_, a_).ranks_b, "otp(a,a) not reflexive"); });

    std::optional<Decomposition> d;
    check(kGammaSearch, [&]() -> std::optional<std::string> {
      d = decompose(a_, b_);
      return std::nullopt;
    });
    if (!d) return std::move(result_);

    check(kClosureConfluence, [&] { return confluence(d->classes); });
    check(kSignPurity, [&] { return sign_purity(*d); });
    check(kZeroSingletons, [&] { return zero_singletons(*d); });
    check(kClassSeparation, [&] { return separation(d->classes); });
    for (std::size_t i = 0; i < d->classes.size(); ++i) {
      if (!d->analyses[i]) continue;
      const ClassAnalysis& an = *d->analyses[i];
      const auto [x, y] = oriented(an.cls.lo, an.cls.hi, an.swapped);
      check(kBlockShift, [&] { return block_shift(x, y, an); });
      check(kZetaInequalities, [&] { return zeta_inequalities(x, y, an); });
      check(kOrderlyOracle, [&] { return orderly_oracle(x, y, an); });
    }
    check(kCoverValid, [&]() -> std::optional<std::string> { return cover_defect(a_, b_, d->cover); });
    check(kCoverK, [&] { return cover_k(*d); });
    for (const auto& piece : d->cover.pieces) {
      if (piece.kind == PieceKind::equal_singleton) continue;
      const auto [x, y] = oriented(piece.lo, piece.hi, piece.kind == PieceKind::ba_orderly);
      check(kDagger, [&]() -> std::optional<std::string> {
        build_g_sequence(x, y, piece.k, piece.blocks);
        return std::nullopt;
      });
    }
    const OrderTypePattern pattern = otp(a_, b_);
    for (Value n = 3; n <= config_.max_n; ++n) {
      std::optional<EmbeddingMap> e;
      check(kEmbedding, [&]() -> std::optional<std::string> {
        e = cover_embedding(a_, b_, d->cover, n);
        return expect(verify_embedding(*e, pattern), "verify_embedding rejects the map");
      });
      if (!e) continue;
      check(kArcInjectivity, [&] { return injectivity(*e); });
      check(kMonotoneAmbience, [&] { return ambience(*e, pattern); });
    }
    if (a_.size() <= 3) check(kOrderTypeGraph, [&] { return order_type_graph_check(pattern); });
    return std::move(result_);
  }

 private:
  using Outcome = std::optional<std::string>;

  static Outcome expect(bool ok, const std::string& why) { return ok ? std::nullopt : Outcome(why); }

  void check(Check which, const std::function<Outcome()>& body) {
    ++result_.checked[which];
    Outcome defect;
    try {
      defect = body();
    } catch (const std::exception& e) {
      defect = std::string("exception: ") + e.what();
    }
    if (defect)
      result_.failures.push_back({index_, invariant_names()[which], *defect,
                                  io::json{{"a", io::to_json(a_)}, {"b", io::to_json(b_)}}});
  }

  std::pair<IncreasingTuple, IncreasingTuple> oriented(std::size_t lo, std::size_t hi, bool swap) const {
    IncreasingTuple x = a_.slice(lo, hi), y = b_.slice(lo, hi);
    if (swap) std::swap(x, y);
    return {std::move(x), std::move(y)};
  }

  Outcome otp_invariance() {
    const Value scale = 1 + rng_.below(5);
    const Value shift = rng_.below(100);
    auto f = [&](Value v) { return scale * v + shift + v * v; };
    const TupleLimits wide{16, ~Value{0}};
    return expect(otp(remap_monotone(a_, f, wide), remap_monotone(b_, f, wide)) == otp(a_, b_),
                  "monotone remap changes the order type");
  }

  Outcome confluence(const std::vector<ConvexClass>& classes) {
    auto pairs = closure_generators(a_, b_);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng_.below(i)]);
    const auto shuffled = convex_closure(a_.size(), pairs);
    if (shuffled.size() != classes.size()) return "class count depends on generator order";
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (shuffled[i].first != classes[i].lo || shuffled[i].second != classes[i].hi)
        return "class boundaries depend on generator order";
    return std::nullopt;
  }

  Outcome sign_purity(const Decomposition& d) const {
    for (const auto& c : d.classes)
      for (std::size_t i = c.lo; i <= c.hi; ++i) {
        const Sign s = a_[i] == b_[i] ? Sign::zero : (a_[i] < b_[i] ? Sign::plus : Sign::minus);
        if (s != c.sign) return "index " + std::to_string(i) + " has a sign unlike its class";
      }
    return std::nullopt;
  }

  static Outcome zero_singletons(const Decomposition& d) {
    for (const auto& c : d.classes)
      if (c.sign == Sign::zero && c.size() != 1)
        return "zero class [" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "] is not a singleton";
    return std::nullopt;
  }

  Outcome separation(const std::vector<ConvexClass>& classes) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        const auto& lo = classes[i];
        const auto& hi = classes[j];
        if (!(a_[lo.hi] < b_[hi.lo]) || !(b_[lo.hi] < a_[hi.lo]))
          return "classes " + std::to_string(i) + " and " + std::to_string(j) + " overlap in value";
      }
    return std::nullopt;
  }

  static Outcome block_shift(const IncreasingTuple& x, const IncreasingTuple& y, const ClassAnalysis& an) {
    const auto& blocks = an.blocks;
    if (blocks.size() != an.n_a() + 1) return "expected n_A + 1 blocks";
    if (blocks.front().lo != std::min(x.front(), y.front())) return "blocks do not start at the hull minimum";
    if (!blocks.back().closed || blocks.back().hi != std::max(x.back(), y.back()))
      return "last block does not close at the hull maximum";
    for (std::size_t m = 0; m + 1 < blocks.size(); ++m)
      if (blocks[m].closed || blocks[m].hi != blocks[m + 1].lo) return "blocks are not contiguous";
    auto where = [&](Value v) -> std::optional<std::size_t> {
      for (std::size_t m = 0; m < blocks.size(); ++m)
        if (blocks[m].contains(v)) return m;
      return std::nullopt;
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
      const auto bx = where(x[i]), by = where(y[i]);
      if (!bx || !by) return "value outside every block at index " + std::to_string(i);
      if (*by != *bx + 1) return "b is not one block above a at index " + std::to_string(i);
    }
    return std::nullopt;
  }

  static Outcome zeta_inequalities(const IncreasingTuple& x, const IncreasingTuple& y, const ClassAnalysis& an) {
    const auto& z = an.zetas;
    if (z.size() != an.n_a()) return "zeta has the wrong length";
    if (z.front() != an.deltas.front()) return "zeta does not start at delta_0";
    const std::size_t lo = an.cls.lo;
    for (std::size_t m = 0; m + 1 < z.size(); ++m) {
      const std::size_t p = z[m] - lo, q = z[m + 1] - lo;
      if (!(z[m] < z[m + 1])) return "zeta is not increasing";
      if (!(x[p] < x[q] && x[q] <= y[p])) return "zeta step " + std::to_string(m) + " leaves (a, b]";
    }
    for (std::size_t m = 0; m + 2 < z.size(); ++m)
      if (!(y[z[m] - lo] < x[z[m + 2] - lo])) return "zeta skip inequality fails at " + std::to_string(m);
    return std::nullopt;
  }

  static Outcome orderly_oracle(const IncreasingTuple& x, const IncreasingTuple& y, const ClassAnalysis& an) {
    const std::size_t n_a = an.n_a();
    const auto minimal = minimal_orderly_k(x, y, n_a + 1);
    if (!minimal || *minimal != n_a)
      return "exhaustive minimal k " + (minimal ? std::to_string(*minimal) : std::string("none")) +
             " differs from n_A " + std::to_string(n_a);
    if (!is_k_orderly(x, y, n_a)) return "canonical witness missing at k = n_A";
    return std::nullopt;
  }

  Outcome cover_k(const Decomposition& d) const {
    std::size_t k = 0;
    for (const auto& an : d.analyses)
      if (an) k = std::max(k, an->n_a());
    return expect(d.cover.k == std::max<std::size_t>(k, 1), "cover k is not the largest n_A");
  }

  static Outcome injectivity(const EmbeddingMap& e) {
    const auto& g = std::get<Graph>(e.source);
    for (auto [u, v] : g.edges())
      if (e.images[u] == e.images[v]) return "adjacent vertices share an image";
    return std::nullopt;
  }

  static Outcome ambience(EmbeddingMap e, const OrderTypePattern& pattern) {
    for (auto& img : e.images)
      img = remap_monotone(img, [](Value v) { return 3 * v + 7; }, TupleLimits{16, ~Value{0}});
    return expect(verify_embedding(e, pattern), "monotone remap of the images breaks the embedding");
  }

  Outcome order_type_graph_check(const OrderTypePattern& pattern) const {
    const Value theta = std::min<Value>(pattern.merged_size() + 2, 8);
    const Graph g = order_type_graph(pattern, theta);
    for (std::size_t u = 0; u < g.order(); ++u) {
      if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(u))) return "self-loop";
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        const auto& c = g.label(static_cast<Vertex>(u));
        const auto& e = g.label(static_cast<Vertex>(v));
        const bool want = otp(c, e) == pattern || otp(e, c) == pattern;
        if (want != g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) ||
            g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) !=
                g.adjacent(static_cast<Vertex>(v), static_cast<Vertex>(u)))
          return "adjacency of " + c.to_string() + " and " + e.to_string() + " is wrong";
      }
    }
    return std::nullopt;
  }

  std::uint64_t index_;
  const IncreasingTuple& a_;
  const IncreasingTuple& b_;
  SplitMix64& rng_;
  const SuiteConfig& config_;
  CaseResult result_;
};

SuiteReport aggregate(const SuiteConfig& config, std::vector<CaseResult>& cases) {
  SuiteReport report;
  report.config = config;
  for (const auto& name : invariant_names()) report.tallies.push_back({name, 0, 0});
  for (auto& c : cases) {
    for (std::size_t i = 0; i < kCheckCount; ++i) report.tallies[i].checked += c.checked[i];
    for (auto& f : c.failures) {
      const auto pos = std::find(invariant_names().begin(), invariant_names().end(), f.invariant) -
                       invariant_names().begin();
      ++report.tallies[static_cast<std::size_t>(pos)].failed;
      report.failures.push_back(std::move(f));
    }
  }
  return report;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  validate_suite_config(config);
  std::vector<CaseResult> cases(config.count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < config.count;) {
      SplitMix64 rng(case_seed(config.seed, i));
      const auto [a, b] = random_pair(rng, config.caps);
      cases[i] = CaseRunner(i, a, b, rng, config).run();
    }
  };
  const std::size_t threads = std::min<std::uint64_t>(config.threads, std::max<std::uint64_t>(config.count, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return aggregate(config, cases);
}

SuiteReport run_suite_on(const IncreasingTuple& a, const IncreasingTuple& b, const SuiteConfig& config) {
  validate_suite_config(config);
  require(a.size() == b.size(), "suite: tuple lengths differ");
  require(a != b, "pair must differ");
  SuiteConfig single = config;
  single.count = 1;
  SplitMix64 rng(case_seed(config.seed, 0));
  std::vector<CaseResult> cases;
  cases.push_back(CaseRunner(0, a, b, rng, single).run());
  return aggregate(single, cases);
}

std::string format_table(const SuiteReport& report) {
  std::ostringstream out;
  const auto& c = report.config;
  out << "suite seed=" << c.seed << " count=" << c.count << " max_length=" << c.caps.max_length
      << " max_value=" << c.caps.max_value << " max_N=" << c.max_n << "\n";
  out << std::left << std::setw(28) << "invariant" << std::right << std::setw(10) << "checked"
      << std::setw(8) << "failed" << "\n";
  for (const auto& t : report.tallies) {
    if (t.checked == 0) continue;
    out << std::left << std::setw(28) << t.name << std::right << std::setw(10) << t.checked
        << std::setw(8) << t.failed << "\n";
  }
  for (const auto& f : report.failures) {
    io::json j = f.instance;
    j["case"] = f.case_index;
    j["invariant"] = f.invariant;
    j["detail"] = f.detail;
    out << "failure " << j.dump() << "\n";
  }
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

io::json to_json(const SuiteReport& report) {
  const auto& c = report.config;
  io::json tallies = io::json::array();
  for (const auto& t : report.tallies)
    tallies.push_back({{"invariant", t.name}, {"checked", t.checked}, {"failed", t.failed}});
  io::json failures = io::json::array();
  for (const auto& f : report.failures) {
    io::json j = f.instance;
    j["case"] = f.case_index;
    j["invariant"] = f.invariant;
    j["detail"] = f.detail;
    failures.push_back(std::move(j));
  }
  return {{"kind", "suite"},
          {"seed", c.seed},
          {"count", c.count},
          {"max_length", c.caps.max_length},
          {"max_value", c.caps.max_value},
          {"max_N", c.max_n},
          {"tallies", std::move(tallies)},
          {"failures", std::move(failures)},
          {"ok", report.ok()}};
}

}  // namespace otg
