#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mmdseg/error.hpp"
#include "mmdseg/kernel.hpp"
#include "support.hpp"

using namespace mmdseg;

namespace {

Dataset from_rows(const std::vector<std::vector<double>>& rows) {
  Dataset d;
  for (const auto& r : rows) d.push_back(r);
  return d;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("l2_distance basic values") {
  const std::vector<double> a{1, 2, 3, 4};
  CHECK(l2_distance(a, a) == 0.0);
  const std::vector<double> ones(37, 1.0), zeros(37, 0.0);
  CHECK(l2_distance(ones, zeros) == doctest::Approx(1.0).epsilon(1e-15));
  const std::vector<double> short_curve{1, 2};
  CHECK_THROWS_AS(l2_distance(a, short_curve), DimensionError);
}

TEST_CASE("l2_distance of sin(2 pi t) against fine quadrature") {
  const std::size_t p = 128;
  std::vector<double> s(p), z(p, 0.0);
  for (std::size_t j = 1; j <= p; ++j) s[j - 1] = std::sin(2 * std::numbers::pi * j / double(p));
  // Midpoint rule with 10^6 nodes for the integral of sin^2 over [0, 1].
  const std::size_t q = 1'000'000;
  double integral = 0.0;
  for (std::size_t i = 0; i < q; ++i) {
    const double v = std::sin(2 * std::numbers::pi * (i + 0.5) / double(q));
    integral += v * v;
  }
  integral /= double(q);
  CHECK(std::abs(l2_distance(s, z) - std::sqrt(integral)) < 1e-3);
}

TEST_CASE("l2_distance triangle inequality") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> a(20), b(20), c(20);
    for (std::size_t j = 0; j < 20; ++j) {
      a[j] = z(gen);
      b[j] = z(gen);
      c[j] = 3 * z(gen);
    }
    CHECK(l2_distance(a, c) <= l2_distance(a, b) + l2_distance(b, c) + 1e-10);
  }
}

TEST_CASE("median heuristic examples") {
  // On a one-point grid the distance is |a - b|.
  CHECK(median_heuristic(from_rows({{0}, {3}})).value() == 3.0);
  CHECK(median_heuristic(from_rows({{0}, {1}, {3}})).value() == 2.0);       // {1, 2, 3}
  CHECK(median_heuristic(from_rows({{0}, {1}, {2}})).value() == 1.0);       // {1, 1, 2}
  CHECK(median_heuristic(from_rows({{0}, {1}, {3}, {7}})).value() == 3.5);  // {1, 2, 3, 4, 6, 7}
  CHECK(median_heuristic(from_rows({{0}, {4}, {5}, {6}})).value() == 3.0);  // {1, 1, 2, 4, 5, 6}
}

TEST_CASE("median heuristic is order invariant") {
  const Dataset d = support::random_dataset(17, 8, 3);
  const double h = median_heuristic(d).value();
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto order = support::shuffled(d.size(), s);
    CHECK(median_heuristic(d.reordered(order)).value() == h);
  }
}

TEST_CASE("median heuristic rejects degenerate data") {
  CHECK_THROWS_AS(median_heuristic(from_rows({{1, 2}, {1, 2}, {1, 2}})), DegenerateBandwidthError);
  // most pairs coincide, so the median distance is zero
  CHECK_THROWS_AS(median_heuristic(from_rows({{0}, {0}, {0}, {0}, {1}})), DegenerateBandwidthError);
  CHECK_THROWS(median_heuristic(from_rows({{0}})));
}

TEST_CASE("bandwidth validation") {
  CHECK_THROWS_AS(Bandwidth(0.0), ConfigError);
  CHECK_THROWS_AS(Bandwidth(-1.0), ConfigError);
  CHECK_THROWS_AS(Bandwidth(std::nan("")), ConfigError);
  CHECK(Bandwidth(0.5).value() == 0.5);
}

TEST_CASE("gaussian kernel values") {
  const std::vector<double> a{0, 0}, b{1, 1}, c{2, 2};
  CHECK(gaussian_kernel(a, a, Bandwidth(0.3)) == 1.0);
  CHECK(gaussian_kernel(a, b, Bandwidth(1.0)) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(gaussian_kernel(a, c, Bandwidth(1.0)) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("gram matrix") {
  CHECK_THROWS(gram_matrix(from_rows({{1, 2}}), Bandwidth(1)));
  const GramMatrix same = gram_matrix(from_rows({{1, 2}, {1, 2}}), Bandwidth(1));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(same(i, j) == 1.0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Dataset d = support::random_dataset(5 + seed, 16, seed, {3}, 0.5);
    const double h = median_heuristic(d).value();
    const GramMatrix g = gram_matrix(d, Bandwidth(h));
    const GramMatrix ref = support::naive_gram(d, h);
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(g(i, i) == 1.0);
      for (std::size_t j = 0; j < d.size(); ++j) {
        CHECK(std::abs(g(i, j) - ref(i, j)) < 1e-12);
        CHECK(g(i, j) == g(j, i));
        CHECK(g(i, j) > 0.0);
        CHECK(g(i, j) <= 1.0);
        total += g(i, j);
      }
    }
    CHECK(g.total() == doctest::Approx(total).epsilon(1e-13));
  }
}

}
