#include <cmath>
#include <functional>
#include <numbers>

#include "doctest.h"
#include "mmdseg/error.hpp"
#include "mmdseg/simgen.hpp"

using namespace mmdseg;

namespace {

constexpr double kPi = std::numbers::pi;

ModelSpec spec_of(const std::string& id, std::vector<std::size_t> lengths, std::uint64_t seed = 1,
                  double c = 1.0) {
  ModelSpec s;
  s.model_id = id;
  s.segment_lengths = std::move(lengths);
  s.seed = seed;
  s.c = c;
  return s;
}

// Mean functions transcribed from the model catalogue.
double m_quartic(double t) { return 0.5 - 100 * (t - 0.1) * (t - 0.3) * (t - 0.5) * (t - 0.9); }
double m_cubic(double t) { return 1 + 3 * t * t - 5 * t * t * t; }
double m_osc(double t) { return std::sin(1 + 10 * kPi * t); }
double m_model2(double t) {
  double s = 0.0;
  for (int j = 1; j <= 3; ++j) s += 0.75 * (j % 2 == 1 ? 1 : -1) * std::sqrt(2.0) * std::sin(j * kPi * t);
  return s;
}

using Mean = std::function<double(double)>;
const Mean zero = [](double) { return 0.0; };

}  // namespace

TEST_SUITE("simgen") {

TEST_CASE("grid is right-closed") {
  const auto g = unit_grid(128);
  CHECK(g.size() == 128);
  CHECK(g.front() == 1.0 / 128);
  CHECK(g.back() == 1.0);
}

TEST_CASE("Brownian bridge pinning and variance") {
  RandomStream rng(1, 0);
  double s1 = 0, s2 = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const auto b = brownian_bridge(128, rng);
    REQUIRE(b.back() == 0.0);
    s1 += b[63];
    s2 += b[63] * b[63];
  }
  const double mean = s1 / draws;
  CHECK(std::abs(s2 / draws - mean * mean - 0.25) < 0.02);
  RandomStream a(7, 3), b(7, 3);
  CHECK(brownian_bridge(64, a) == brownian_bridge(64, b));
  CHECK_THROWS_AS(brownian_bridge(1, a), ConfigError);
}

TEST_CASE("bases") {
  const auto g = unit_grid(128);
  const auto s = sine_basis(3, g);
  CHECK(s[2 * 128 + 10] == doctest::Approx(std::sqrt(2.0) * std::sin(3 * kPi * g[10])));
  const auto f = fourier_basis(4, g);
  CHECK(f[5] == 1.0);
  CHECK(f[128 + 5] == doctest::Approx(std::sqrt(2.0) * std::sin(2 * kPi * g[5])));
  CHECK(f[2 * 128 + 5] == doctest::Approx(std::sqrt(2.0) * std::cos(2 * kPi * g[5])));
  CHECK(f[3 * 128 + 5] == doctest::Approx(std::sqrt(2.0) * std::sin(4 * kPi * g[5])));
  const auto h = shifted_fourier_basis(75, g);
  CHECK(h.size() == 151 * 128);
  CHECK(h[7] == 1.0);
  CHECK(h[128 + 7] == doctest::Approx(std::sqrt(2.0) * std::sin(2 * kPi * g[7] - kPi)));
  CHECK(h[2 * 128 + 7] == doctest::Approx(std::sqrt(2.0) * std::cos(2 * kPi * g[7] - kPi)));
  // Riemann orthonormality of the sine basis
  const auto b = sine_basis(5, g);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double ip = 0;
      for (int k = 0; k < 128; ++k) ip += b[i * 128 + k] * b[j * 128 + k] / 128.0;
      CHECK(ip == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
    }
}

TEST_CASE("KL curve with zero eigenvalues equals its mean") {
  KarhunenLoeve p;
  p.grid_size = 16;
  const auto g = unit_grid(16);
  p.basis = sine_basis(3, g);
  p.eigenvalues = {0, 0, 0};
  p.mean.assign(16, 0.0);
  for (std::size_t j = 0; j < 16; ++j) p.mean[j] = std::cos(g[j]);
  RandomStream rng(1, 1);
  CHECK(kl_curve(p, rng) == p.mean);
  p.eigenvalues = {1, -1, 0};
  CHECK_THROWS_AS(kl_curve(p, rng), ConfigError);
  p.eigenvalues = {1, 1};
  CHECK_THROWS_AS(kl_curve(p, rng), DimensionError);
}

TEST_CASE("Model N4 pointwise variance at t = 1/2") {
  const GeneratedSample s = generate(spec_of("N4", {10000}, 3));
  double expected = 0;
  for (int j = 1; j <= 40; ++j) expected += 2 * std::pow(std::sin(j * kPi / 2), 2) / (j * j);
  double s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < s.data.size(); ++i) {
    const double x = s.data[i][63];
    s1 += x;
    s2 += x * x;
  }
  const double n = double(s.data.size());
  const double var = s2 / n - (s1 / n) * (s1 / n);
  CHECK(std::abs(var / expected - 1.0) < 0.05);
}

TEST_CASE("catalogue bookkeeping") {
  CHECK(model_ids().size() == 18);
  CHECK(population_count("N3") == 1);
  CHECK(population_count("5") == 2);
  CHECK(population_count("M2") == 2);
  CHECK(population_count("12") == 3);
  CHECK_THROWS_AS(population_count("13"), ConfigError);
  CHECK(generate(spec_of("N3", {100})).truth.count() == 0);
  CHECK(generate(spec_of("8", {100, 100, 100})).truth.boundaries() == std::vector<std::size_t>{100, 200});
  CHECK_THROWS_AS(generate(spec_of("8", {100, 100})), ConfigError);
  CHECK(breakfraction_lengths(100, 0.3) == std::vector<std::size_t>{30, 70});
  CHECK_THROWS_AS(breakfraction_lengths(100, 1.0), ConfigError);
}

TEST_CASE("generation is deterministic per seed") {
  for (const auto& id : model_ids()) {
    const std::size_t k = population_count(id);
    const ModelSpec spec = spec_of(id, std::vector<std::size_t>(k, 5), 17);
    const GeneratedSample a = generate(spec), b = generate(spec);
    CHECK(a.data.values() == b.data.values());
    CHECK(a.data.size() == 5 * k);
    ModelSpec other = spec;
    other.seed = 18;
    CHECK(generate(other).data.values() != a.data.values());
  }
}

TEST_CASE("bridge-based curves are pinned at t = 1") {
  for (const char* id : {"N2", "4", "9"}) {
    const std::size_t k = population_count(id);
    const GeneratedSample s = generate(spec_of(id, std::vector<std::size_t>(k, 20)));
    const auto g = unit_grid(128);
    for (std::size_t i = 0; i < s.data.size(); ++i) {
      // bridge part is zero at t = 1, leaving only the mean
      const double mean_at_1 = std::string(id) == "4" && i >= 20 ? std::sin(1.0)
                               : std::string(id) == "9" && i >= 20 && i < 40 ? 1.0
                                                                             : 0.0;
      CHECK(s.data[i][127] == doctest::Approx(mean_at_1).epsilon(1e-12));
    }
  }
}

TEST_CASE("segment means match the catalogue") {
  struct Case {
    const char* id;
    std::vector<Mean> means;
  };
  const std::vector<Case> cases = {
      {"N1", {[](double t) { return m_quartic(t) + 0.8 * m_osc(t); }}},
      {"N3", {[](double t) { return 2 * t; }}},
      {"1", {[](double t) { return 2 * t; }, [](double t) { return 6 * t * (1 - t); }}},
      {"2", {zero, m_model2}},
      {"3", {[](double t) { return m_quartic(t) + 0.8 * m_osc(t); },
             [](double t) { return m_cubic(t) + 0.6 * m_osc(t); }}},
      {"4", {zero, [](double t) { return std::sin(t); }}},
      {"8", {m_quartic, [](double t) { return m_cubic(t) + 1.5 * m_osc(t); }, m_cubic}},
      {"9", {zero, [](double t) { return t; }, zero}},
  };
  const std::size_t draws = 2000;
  const std::size_t probes[] = {15, 40, 63, 90, 110};
  const auto g = unit_grid(128);
  for (const Case& c : cases) {
    CAPTURE(c.id);
    const GeneratedSample s = generate(spec_of(c.id, std::vector<std::size_t>(c.means.size(), draws), 21));
    for (std::size_t seg = 0; seg < c.means.size(); ++seg) {
      for (std::size_t j : probes) {
        double s1 = 0, s2 = 0;
        for (std::size_t i = seg * draws; i < (seg + 1) * draws; ++i) {
          s1 += s.data[i][j];
          s2 += s.data[i][j] * s.data[i][j];
        }
        const double mean = s1 / draws;
        const double se = std::sqrt((s2 / draws - mean * mean) / draws);
        CAPTURE(seg);
        CAPTURE(j);
        CHECK(std::abs(mean - c.means[seg](g[j])) <= 3 * se);
      }
    }
  }
}

TEST_CASE("Model 5 variance ratio") {
  const GeneratedSample s = generate(spec_of("5", {2000, 2000}, 5));
  for (std::size_t j : {15u, 40u, 63u, 90u, 110u}) {
    double v[2];
    for (int seg = 0; seg < 2; ++seg) {
      double s1 = 0, s2 = 0;
      for (std::size_t i = seg * 2000; i < (seg + 1) * 2000u; ++i) {
        s1 += s.data[i][j];
        s2 += s.data[i][j] * s.data[i][j];
      }
      v[seg] = s2 / 2000 - (s1 / 2000) * (s1 / 2000);
    }
    CHECK(std::abs(v[1] / v[0] / 3.0 - 1.0) < 0.1);
  }
}

}
