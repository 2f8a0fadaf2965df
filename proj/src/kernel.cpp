#include "mmdseg/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mmdseg/error.hpp"

namespace mmdseg {

Bandwidth::Bandwidth(double h) : h_(h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ConfigError("bandwidth must be a positive finite number, got " + std::to_string(h));
  }
}

double l2_distance(Curve a, Curve b) {
  if (a.size() != b.size()) {
    throw DimensionError("grid size mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  if (a.empty()) {
    throw DimensionError("curves must have at least one grid point");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(a.size()));
}

Bandwidth median_heuristic(const Dataset& data) {
  const std::size_t n = data.size();
  if (n < 2) {
    throw DataError("median heuristic needs at least two observations");
  }
  std::vector<double> dist;
  dist.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist.push_back(l2_distance(data[i], data[j]));
    }
  }
  const std::size_t m = dist.size();
  const std::size_t mid = m / 2;
  std::nth_element(dist.begin(), dist.begin() + mid, dist.end());
  double median = dist[mid];
  if (m % 2 == 0) {
    const double lower = *std::max_element(dist.begin(), dist.begin() + mid);
    median = 0.5 * (lower + median);
  }
  if (median <= 0.0) {
    const double largest = *std::max_element(dist.begin(), dist.end());
    if (largest <= 0.0) {
      throw DegenerateBandwidthError("all pairwise distances are zero; bandwidth undefined");
    }
    throw DegenerateBandwidthError("median pairwise distance is zero; supply a fixed bandwidth");
  }
  return Bandwidth(median);
}

double gaussian_kernel(Curve a, Curve b, Bandwidth h) {
  const double d = l2_distance(a, b);
  const double hh = h.value();
  return std::exp(-(d * d) / (2.0 * hh * hh));
}

GramMatrix::GramMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) {
    throw DimensionError("gram buffer size does not match n*n");
  }
}

double GramMatrix::total() const {
  double s = 0.0;
  for (double v : entries_) s += v;
  return s;
}

GramMatrix gram_matrix(const Dataset& data, Bandwidth h) {
  const std::size_t n = data.size();
  if (n < 2) {
    throw DataError("gram matrix needs at least two observations");
  }
  std::vector<double> k(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = gaussian_kernel(data[i], data[j], h);
      k[i * n + j] = v;
      k[j * n + i] = v;
    }
  }
  return GramMatrix(n, std::move(k));
}

}  // namespace mmdseg
