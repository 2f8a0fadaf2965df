#include "mmdseg/amoc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmdseg/error.hpp"
#include "mmdseg/parallel.hpp"
#include "mmdseg/random.hpp"

namespace mmdseg {

void validate(const AmocConfig& config) {
  if (!(config.delta > 0.0 && config.delta < 0.5)) {
    throw ConfigError("delta must lie in (0, 1/2)");
  }
  if (config.permutations < 1) {
    throw ConfigError("permutation count must be at least 1");
  }
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw ConfigError("alpha must lie in (0, 1)");
  }
}

std::optional<SplitRange> amoc_range(std::size_t m, double delta) {
  const auto base = boundary_range(m, delta);
  if (!base || m < 4) return std::nullopt;
  const std::size_t lo = std::max<std::size_t>(base->t_min, 2);
  const std::size_t hi = std::min(base->t_max, m - 2);
  if (lo > hi) return std::nullopt;
  return SplitRange{lo, hi};
}

std::size_t min_splittable_length(double delta) {
  std::size_t m = 4;
  while (!amoc_range(m, delta)) ++m;
  return m;
}

AmocStatistic amoc_statistic(const GramMatrix& gram, double delta, std::span<const std::size_t> order) {
  const auto range = amoc_range(order.size(), delta);
  if (!range) {
    throw ConfigError("block of " + std::to_string(order.size()) +
                      " observations has no admissible split");
  }
  const RhoCurve curve = rho_curve(gram, order, *range);
  return {curve.max_value, curve.argmax_t};
}

double permutation_p_value(double observed, std::span<const double> permutation_stats,
                           PValueRule rule) {
  if (permutation_stats.empty()) {
    throw ConfigError("p-value needs at least one permutation statistic");
  }
  const auto r = static_cast<double>(permutation_stats.size());
  if (rule == PValueRule::strict) {
    const auto above = std::count_if(permutation_stats.begin(), permutation_stats.end(),
                                     [&](double t) { return t > observed; });
    return static_cast<double>(above) / r;
  }
  const auto at_least = std::count_if(permutation_stats.begin(), permutation_stats.end(),
                                      [&](double t) { return t >= observed; });
  return (1.0 + static_cast<double>(at_least)) / (r + 1.0);
}

std::vector<double> permutation_statistics(const GramMatrix& gram, double delta,
                                           std::span<const std::vector<std::size_t>> orders,
                                           unsigned workers) {
  std::vector<double> stats(orders.size());
  parallel_for(orders.size(), workers, [&](std::size_t r) {
    stats[r] = amoc_statistic(gram, delta, orders[r]).value;
  });
  return stats;
}

AmocResult permutation_test(const GramMatrix& gram, std::span<const std::size_t> order,
                            const AmocConfig& config, std::uint64_t stream_key) {
  validate(config);
  const AmocStatistic observed = amoc_statistic(gram, config.delta, order);
  const std::uint64_t key = derive_key(config.seed, {stream_key});

  AmocResult result;
  result.statistic = observed.value;
  result.tau = observed.tau;
  result.gamma_hat = static_cast<double>(observed.tau) / static_cast<double>(order.size());
  result.permutation_stats.resize(config.permutations);
  parallel_for(config.permutations, config.workers, [&](std::size_t r) {
    RandomStream rng(key, r);
    std::vector<std::size_t> shuffled(order.begin(), order.end());
    rng.shuffle(shuffled);
    result.permutation_stats[r] = amoc_statistic(gram, config.delta, shuffled).value;
  });
  result.p_value = permutation_p_value(result.statistic, result.permutation_stats,
                                       config.p_value_rule);
  // T = 0 means no admissible split separates the block at all; under the strict rule the
  // all-tied permutation statistics would otherwise give p = 0.
  if (result.statistic == 0.0) result.p_value = 1.0;
  result.reject = result.p_value < config.alpha;
  return result;
}

AmocResult permutation_test(const GramMatrix& gram, const AmocConfig& config) {
  const auto order = identity_order(gram.size());
  return permutation_test(gram, order, config);
}

AmocDetection amoc_detect(const GramMatrix& gram, std::size_t begin, std::size_t end,
                          const AmocConfig& config, std::uint64_t stream_key) {
  validate(config);
  if (end > gram.size() || begin > end) {
    throw BoundsError("block [" + std::to_string(begin) + ", " + std::to_string(end) +
                      ") outside the sequence");
  }
  AmocDetection out;
  if (!amoc_range(end - begin, config.delta)) {
    out.status = AmocStatus::too_short;
    return out;
  }
  const auto order = block_order(begin, end);
  out.test = permutation_test(gram, order, config, stream_key);
  if (out.test->reject) {
    out.status = AmocStatus::detected;
    out.changepoint = begin + out.test->tau;
  }
  return out;
}

AmocDetection amoc_detect(const Dataset& data, const AmocConfig& config, Bandwidth h) {
  if (data.size() < 4) {
    validate(config);
    return AmocDetection{AmocStatus::too_short, std::nullopt, std::nullopt};
  }
  const GramMatrix gram = gram_matrix(data, h);
  return amoc_detect(gram, 0, data.size(), config);
}

}  // namespace mmdseg
