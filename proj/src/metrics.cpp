#include "mmdseg/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "mmdseg/desc.hpp"
#include "mmdseg/error.hpp"
#include "mmdseg/parallel.hpp"
#include "mmdseg/random.hpp"

namespace mmdseg {

namespace {

std::size_t gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

bool near_any(std::size_t x, std::span<const std::size_t> set) {
  return std::any_of(set.begin(), set.end(), [x](std::size_t y) { return gap(x, y) <= 1; });
}

std::vector<std::size_t> sorted(std::span<const std::size_t> v) {
  std::vector<std::size_t> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  return s;
}

double directed(std::span<const double> from, std::span<const double> to) {
  double worst = 0.0;
  for (double x : from) {
    double best = std::numeric_limits<double>::infinity();
    for (double y : to) best = std::min(best, std::abs(x - y));
    worst = std::max(worst, best);
  }
  return worst;
}

Rate rate(std::size_t hits, std::size_t total) {
  const double p = static_cast<double>(hits) / static_cast<double>(total);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(total))};
}

}  // namespace

bool match(std::span<const std::size_t> estimate, std::span<const std::size_t> truth) {
  if (estimate.size() != truth.size()) return false;
  const auto e = sorted(estimate);
  const auto t = sorted(truth);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (gap(e[i], t[i]) > 1) return false;
  }
  return true;
}

bool superset_match(std::span<const std::size_t> estimate, std::span<const std::size_t> truth) {
  if (estimate.size() <= truth.size()) return false;
  return std::all_of(truth.begin(), truth.end(), [&](std::size_t t) { return near_any(t, estimate); });
}

bool subset_match(std::span<const std::size_t> estimate, std::span<const std::size_t> truth) {
  if (estimate.size() >= truth.size()) return false;
  return std::all_of(estimate.begin(), estimate.end(), [&](std::size_t e) { return near_any(e, truth); });
}

bool match(const Segmentation& estimate, const Segmentation& truth) {
  return match(estimate.boundaries(), truth.boundaries());
}
bool superset_match(const Segmentation& estimate, const Segmentation& truth) {
  return superset_match(estimate.boundaries(), truth.boundaries());
}
bool subset_match(const Segmentation& estimate, const Segmentation& truth) {
  return subset_match(estimate.boundaries(), truth.boundaries());
}

double hausdorff(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw ConfigError("Hausdorff distance is undefined for an empty set");
  }
  return std::max(directed(a, b), directed(b, a));
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::unsupervised: return "desc-u";
    case Algorithm::supervised: return "desc-s";
    case Algorithm::semi_supervised: return "desc-ss";
    case Algorithm::forward: return "desc-forward";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "u" || name == "desc-u") return Algorithm::unsupervised;
  if (name == "s" || name == "desc-s") return Algorithm::supervised;
  if (name == "ss" || name == "desc-ss") return Algorithm::semi_supervised;
  if (name == "forward" || name == "desc-forward") return Algorithm::forward;
  throw ConfigError("unknown algorithm '" + name + "'");
}

ReplicationOutcome run_replication(const BenchmarkCell& cell, std::size_t cell_index,
                                   std::size_t rep, std::uint64_t seed) {
  ModelSpec spec = cell.model;
  spec.seed = derive_key(seed, {cell_index, rep, 0});
  AmocConfig config = cell.config;
  config.seed = derive_key(seed, {cell_index, rep, 1});

  const auto start = std::chrono::steady_clock::now();
  const GeneratedSample sample = generate(spec);
  std::optional<Bandwidth> h;
  if (cell.bandwidth) h = Bandwidth(*cell.bandwidth);
  DescResult result;
  switch (cell.algorithm) {
    case Algorithm::unsupervised: result = desc_u(sample.data, config, h); break;
    case Algorithm::supervised: result = desc_s(sample.data, cell.k, config.delta, h); break;
    case Algorithm::semi_supervised:
      result = desc_ss(sample.data, cell.k_lower, cell.k_upper, config, h);
      break;
    case Algorithm::forward: result = desc_forward(sample.data, cell.k_lower, config, h); break;
  }
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(result.segmentation), sample.truth,
          std::chrono::duration<double>(stop - start).count()};
}

CellReport summarize(const BenchmarkCell& cell, const std::vector<ReplicationOutcome>& outcomes) {
  CellReport r;
  r.cell = cell;
  r.replications = outcomes.size();
  if (outcomes.empty()) return r;
  std::size_t k_ok = 0, detected = 0, m = 0, sup = 0, sub = 0, h_count = 0;
  double h_sum = 0.0, t_sum = 0.0;
  for (const auto& o : outcomes) {
    const std::size_t k_hat = o.estimate.count();
    if (r.k_hat_counts.size() <= k_hat) r.k_hat_counts.resize(k_hat + 1, 0);
    ++r.k_hat_counts[k_hat];
    k_ok += k_hat == o.truth.count();
    detected += k_hat >= 1;
    m += match(o.estimate, o.truth);
    sup += superset_match(o.estimate, o.truth);
    sub += subset_match(o.estimate, o.truth);
    if (k_hat > 0 && o.truth.count() > 0) {
      h_sum += hausdorff(o.estimate.breakfractions(), o.truth.breakfractions());
      ++h_count;
    }
    t_sum += o.seconds;
    r.max_seconds = std::max(r.max_seconds, o.seconds);
  }
  const std::size_t total = outcomes.size();
  r.k_correct = rate(k_ok, total);
  r.detected = rate(detected, total);
  r.match = rate(m, total);
  r.superset = rate(sup, total);
  r.subset = rate(sub, total);
  if (h_count > 0) r.mean_hausdorff = h_sum / static_cast<double>(h_count);
  r.mean_seconds = t_sum / static_cast<double>(total);
  return r;
}

BenchmarkReport run_benchmark(const std::vector<BenchmarkCell>& cells, std::size_t replications,
                              std::uint64_t seed, unsigned workers) {
  if (replications < 1) throw ConfigError("replications must be at least 1");
  BenchmarkReport report;
  report.seed = seed;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    BenchmarkCell cell = cells[c];
    cell.config.workers = 1;
    std::vector<ReplicationOutcome> outcomes(replications);
    parallel_for(replications, workers, [&](std::size_t rep) {
      outcomes[rep] = run_replication(cell, c, rep, seed);
    });
    report.cells.push_back(summarize(cells[c], outcomes));
  }
  return report;
}

}  // namespace mmdseg
