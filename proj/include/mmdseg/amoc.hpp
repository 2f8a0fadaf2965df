#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mmdseg/kernel.hpp"
#include "mmdseg/mmd.hpp"

namespace mmdseg {

enum class PValueRule {
  /// #{T_r > T} / R, comparing strictly.
  strict,
  /// (1 + #{T_r >= T}) / (R + 1); always valid at level alpha.
  add_one,
};

struct AmocConfig {
  double delta = 0.05;            // boundary fraction, 0 < delta < 1/2
  std::size_t permutations = 199; // R
  double alpha = 0.05;            // significance level
  std::uint64_t seed = 0;
  PValueRule p_value_rule = PValueRule::strict;
  unsigned workers = 1;           // 0 = hardware concurrency
};

/// Throws ConfigError for out-of-range fields.
void validate(const AmocConfig& config);

/// Admissible splits for a block of m observations: max(ceil(m*delta), 2) ..
/// min(floor(m*(1-delta)), m-2). nullopt when the block is too short.
std::optional<SplitRange> amoc_range(std::size_t m, double delta);

/// Smallest block length with a nonempty admissible range (never below 4).
std::size_t min_splittable_length(double delta);

struct AmocStatistic {
  double value = 0.0;   // T = max rho
  std::size_t tau = 0;  // smallest maximising split, local to the block
};

/// Max and argmax of the rho curve of `order` over amoc_range. Throws ConfigError when the
/// range is empty.
AmocStatistic amoc_statistic(const GramMatrix& gram, double delta, std::span<const std::size_t> order);

struct AmocResult {
  double statistic = 0.0;
  std::size_t tau = 0;         // local split index
  double gamma_hat = 0.0;      // tau / m
  double p_value = 1.0;
  bool reject = false;
  std::vector<double> permutation_stats;
};

/// p-value of `observed` against permutation statistics under `rule`.
double permutation_p_value(double observed, std::span<const double> permutation_stats,
                           PValueRule rule);

/// Statistic of each supplied permutation of `order`. Permutation r is evaluated by
/// reindexing the Gram matrix, never by recomputing kernels.
std::vector<double> permutation_statistics(const GramMatrix& gram, double delta,
                                           std::span<const std::vector<std::size_t>> orders,
                                           unsigned workers = 1);

/// Exact permutation test of "no change" for the observations listed in `order`.
/// Permutation r is drawn from the Philox stream (derive_key(config.seed, {stream_key}), r),
/// so results do not depend on evaluation order or worker count. A statistic of exactly zero
/// yields p = 1.
AmocResult permutation_test(const GramMatrix& gram, std::span<const std::size_t> order,
                            const AmocConfig& config, std::uint64_t stream_key = 0);

/// Whole-sequence test with the configured seed.
AmocResult permutation_test(const GramMatrix& gram, const AmocConfig& config);

enum class AmocStatus { detected, no_change, too_short };

struct AmocDetection {
  AmocStatus status = AmocStatus::no_change;
  std::optional<std::size_t> changepoint;  // in full-sequence coordinates
  std::optional<AmocResult> test;
};

/// Tests the contiguous block [begin, end) and reports its changepoint when the test
/// rejects. Short blocks return too_short instead of throwing.
AmocDetection amoc_detect(const GramMatrix& gram, std::size_t begin, std::size_t end,
                          const AmocConfig& config, std::uint64_t stream_key = 0);

/// Convenience form building the Gram matrix from raw data.
AmocDetection amoc_detect(const Dataset& data, const AmocConfig& config, Bandwidth h);

}  // namespace mmdseg
