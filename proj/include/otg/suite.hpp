#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "otg/chroma.hpp"
#include "otg/io.hpp"
#include "otg/seq.hpp"

namespace otg {

/// splitmix64: state += 0x9e3779b97f4a7c15, then the standard mix. Integers
/// in [0, n) are taken as next() % n.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Seed of case `index` in a run seeded with `seed`; independent of how cases
/// are scheduled.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

struct PairCaps {
  std::size_t max_length = 8;
  /// Values are drawn from 0..max_value-1.
  Value max_value = 32;
};

/// Length uniform in 1..max_length; 2*length values drawn with replacement
/// and sorted; a random half of the positions goes to a, the rest to b.
/// Draws with repeated values inside a or b, or with a = b, are rejected.
std::pair<IncreasingTuple, IncreasingTuple> random_pair(SplitMix64& rng, const PairCaps& caps);

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::uint64_t count = 100;
  PairCaps caps;
  /// Embeddings are checked for N = 3..max_n.
  Value max_n = 5;
  std::size_t threads = 1;
};

struct InvariantTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

struct SuiteFailure {
  std::uint64_t case_index = 0;
  std::string invariant;
  std::string detail;
  io::json instance;  ///< {"a": [...], "b": [...]}, enough to replay
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<InvariantTally> tallies;  ///< Fixed order, see invariant_names()
  std::vector<SuiteFailure> failures;   ///< Ordered by case index

  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& invariant_names();

/// Throws invalid_argument when the caps fall outside the supported range.
void validate_suite_config(const SuiteConfig& config);

SuiteReport run_suite(const SuiteConfig& config);

/// Runs every invariant on one explicit pair (case index 0).
SuiteReport run_suite_on(const IncreasingTuple& a, const IncreasingTuple& b, const SuiteConfig& config);

std::string format_table(const SuiteReport& report);
io::json to_json(const SuiteReport& report);

}  // namespace otg
