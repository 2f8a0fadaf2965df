#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "mmdseg/error.hpp"
#include "mmdseg/metrics.hpp"

using namespace mmdseg;

namespace {

using V = std::vector<std::size_t>;
using F = std::vector<double>;

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("match") {
  CHECK(match(V{100, 200}, V{100, 200}));
  CHECK(match(V{101, 199}, V{100, 200}));
  CHECK(match(V{199, 101}, V{100, 200}));
  CHECK_FALSE(match(V{100}, V{100, 200}));
  CHECK_FALSE(match(V{102, 200}, V{100, 200}));
  CHECK(match(V{}, V{}));
}

TEST_CASE("superset match") {
  CHECK(superset_match(V{50, 100, 200}, V{100, 200}));
  CHECK_FALSE(superset_match(V{100, 200}, V{100, 200}));
  CHECK_FALSE(superset_match(V{50, 150}, V{100}));
  CHECK(superset_match(V{99, 101}, V{100}));
}

TEST_CASE("subset match") {
  CHECK(subset_match(V{100}, V{100, 200}));
  CHECK_FALSE(subset_match(V{150}, V{100, 200}));
  CHECK(subset_match(V{}, V{100}));
  CHECK_FALSE(subset_match(V{100, 200}, V{100, 200}));
}

TEST_CASE("hausdorff") {
  CHECK(hausdorff(F{0.3, 0.6}, F{0.3, 0.6}) == 0.0);
  CHECK(hausdorff(F{0.25}, F{0.75}) == 0.5);
  CHECK(hausdorff(F{0.2, 0.8}, F{0.25}) == doctest::Approx(0.55));
  CHECK_THROWS_AS(hausdorff(F{}, F{0.5}), ConfigError);
  CHECK_THROWS_AS(hausdorff(F{0.5}, F{}), ConfigError);
}

TEST_CASE("metric invariants on random pairs") {
  std::mt19937_64 gen(5);
  const std::size_t n = 300;
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::size_t> truth, est;
    const int k0 = 1 + int(gen() % 3), k1 = int(gen() % 5);
    std::uniform_int_distribution<std::size_t> pos(1, n - 1);
    for (int i = 0; i < k0; ++i) truth.push_back(pos(gen));
    for (int i = 0; i < k1; ++i) {
      if (i < k0 && gen() % 2) {
        est.push_back(std::clamp<std::size_t>(truth[i] + gen() % 3 - 1, 1, n - 1));
      } else {
        est.push_back(pos(gen));
      }
    }
    std::sort(truth.begin(), truth.end());
    truth.erase(std::unique(truth.begin(), truth.end()), truth.end());
    std::sort(est.begin(), est.end());
    est.erase(std::unique(est.begin(), est.end()), est.end());
    const bool m = match(est, truth);
    CHECK_FALSE((m && superset_match(est, truth)));
    CHECK_FALSE((m && subset_match(est, truth)));
    if (m && !est.empty()) {
      const Segmentation e(n, est), t(n, truth);
      CHECK(hausdorff(e.breakfractions(), t.breakfractions()) <= 1.0 / n + 1e-15);
    }
  }
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("u") == Algorithm::unsupervised);
  CHECK(parse_algorithm("desc-ss") == Algorithm::semi_supervised);
  CHECK(std::string(to_string(Algorithm::forward)) == "desc-forward");
  CHECK_THROWS_AS(parse_algorithm("x"), ConfigError);
}

TEST_CASE("summaries") {
  BenchmarkCell cell;
  const Segmentation truth(300, {100, 200});
  std::vector<ReplicationOutcome> outcomes = {
      {Segmentation(300, {100, 200}), truth, 0.5},
      {Segmentation(300, {100}), truth, 1.5},
      {Segmentation(300, {}), truth, 1.0},
      {Segmentation(300, {50, 100, 201}), truth, 1.0},
  };
  const CellReport r = summarize(cell, outcomes);
  CHECK(r.replications == 4);
  CHECK(r.k_correct.value == 0.25);
  CHECK(r.k_correct.standard_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 4)));
  CHECK(r.detected.value == 0.75);
  CHECK(r.match.value == 0.25);
  CHECK(r.subset.value == 0.5);
  CHECK(r.superset.value == 0.25);
  CHECK(r.k_hat_counts == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(r.max_seconds == 1.5);
  CHECK(r.mean_seconds == 1.0);
  REQUIRE(r.mean_hausdorff);
}

TEST_CASE("benchmark is deterministic and rates are binary at one replication") {
  BenchmarkCell cell;
  cell.model.model_id = "1";
  cell.model.segment_lengths = {30, 30};
  cell.config.permutations = 49;
  const auto a = run_benchmark({cell}, 3, 9, 1);
  const auto b = run_benchmark({cell}, 3, 9, 2);
  REQUIRE(a.cells.size() == 1);
  CHECK(a.cells[0].k_hat_counts == b.cells[0].k_hat_counts);
  CHECK(a.cells[0].match.value == b.cells[0].match.value);
  CHECK(run_replication(cell, 0, 2, 9).estimate == run_replication(cell, 0, 2, 9).estimate);
  const auto one = run_benchmark({cell}, 1, 4, 1);
  for (double v : {one.cells[0].k_correct.value, one.cells[0].match.value, one.cells[0].detected.value})
    CHECK((v == 0.0 || v == 1.0));
  CHECK_THROWS_AS(run_benchmark({cell}, 0, 1, 1), ConfigError);
}

}
