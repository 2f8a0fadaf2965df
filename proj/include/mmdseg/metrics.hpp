#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmdseg/amoc.hpp"
#include "mmdseg/segmentation.hpp"
#include "mmdseg/simgen.hpp"

namespace mmdseg {

/// Same count, and the i-th estimate lies within one index of the i-th true changepoint.
bool match(std::span<const std::size_t> estimate, std::span<const std::size_t> truth);
/// More estimates than true changepoints, and each true changepoint has an estimate within one.
bool superset_match(std::span<const std::size_t> estimate, std::span<const std::size_t> truth);
/// Fewer estimates than true changepoints, and each estimate lies within one of a true one.
bool subset_match(std::span<const std::size_t> estimate, std::span<const std::size_t> truth);

bool match(const Segmentation& estimate, const Segmentation& truth);
bool superset_match(const Segmentation& estimate, const Segmentation& truth);
bool subset_match(const Segmentation& estimate, const Segmentation& truth);

/// Hausdorff distance between two nonempty subsets of [0, 1]. Throws ConfigError if either is empty.
double hausdorff(std::span<const double> a, std::span<const double> b);

enum class Algorithm { unsupervised, supervised, semi_supervised, forward };

const char* to_string(Algorithm algorithm);
/// Accepts "u", "s", "ss", "forward" and the long names.
Algorithm parse_algorithm(const std::string& name);

struct BenchmarkCell {
  ModelSpec model;  // model.seed is replaced per replication
  Algorithm algorithm = Algorithm::unsupervised;
  AmocConfig config;  // config.seed is replaced per replication
  std::size_t k = 1;        // DESC-S budget
  std::size_t k_lower = 0;  // DESC-SS / forward
  std::size_t k_upper = 1;  // DESC-SS
  std::optional<double> bandwidth;
};

struct Rate {
  double value = 0.0;
  double standard_error = 0.0;  // sqrt(p(1-p)/N)
};

struct CellReport {
  BenchmarkCell cell;
  std::size_t replications = 0;
  Rate k_correct;  // P(K_hat = K0)
  Rate detected;   // P(K_hat >= 1); the rejection rate on null models
  Rate match;
  Rate superset;
  Rate subset;
  std::optional<double> mean_hausdorff;  // over replications where both sets are nonempty
  std::vector<std::size_t> k_hat_counts; // histogram indexed by K_hat
  double mean_seconds = 0.0;
  double max_seconds = 0.0;
};

struct BenchmarkReport {
  std::uint64_t seed = 0;
  std::vector<CellReport> cells;
};

/// Outcome of one replication; exposed so callers can drive custom loops.
struct ReplicationOutcome {
  Segmentation estimate;
  Segmentation truth;
  double seconds = 0.0;
};

/// Runs replication `rep` of `cell`: data seed derive_key(seed, {cell_index, rep, 0}),
/// permutation seed derive_key(seed, {cell_index, rep, 1}).
ReplicationOutcome run_replication(const BenchmarkCell& cell, std::size_t cell_index,
                                   std::size_t rep, std::uint64_t seed);

/// Runs every cell `replications` times. Replications are spread over `workers`
/// threads (0 = hardware default); each replication runs its permutations serially.
BenchmarkReport run_benchmark(const std::vector<BenchmarkCell>& cells, std::size_t replications,
                              std::uint64_t seed, unsigned workers = 1);

/// Aggregates outcomes into rates. Exposed for tests.
CellReport summarize(const BenchmarkCell& cell, const std::vector<ReplicationOutcome>& outcomes);

}  // namespace mmdseg
