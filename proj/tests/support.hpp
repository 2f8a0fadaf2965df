#pragma once

// Reference implementations used as test oracles. They deliberately share no code with
// the library: plain loops over explicit index sets, a different RNG, and no sweeps.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mmdseg/dataset.hpp"
#include "mmdseg/kernel.hpp"

namespace support {

using Index = std::vector<std::size_t>;

/// n x p Gaussian noise; rows at or after each entry of `shifts` get an extra offset.
inline mmdseg::Dataset random_dataset(std::size_t n, std::size_t p, std::uint64_t seed,
                                      const Index& change_at = {}, double shift = 1.0) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> z(0.0, 1.0);
  mmdseg::Dataset data(n, p);
  for (std::size_t i = 0; i < n; ++i) {
    double offset = 0.0;
    for (std::size_t c = 0; c < change_at.size(); ++c) {
      if (i >= change_at[c]) offset = shift * static_cast<double>(c + 1) * (c % 2 == 0 ? 1 : -0.5);
    }
    auto row = data.row(i);
    for (std::size_t j = 0; j < p; ++j) row[j] = z(gen) + offset;
  }
  return data;
}

inline double naive_kernel(mmdseg::Curve a, mmdseg::Curve b, double h) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  s /= static_cast<double>(a.size());
  return std::exp(-s / (2.0 * h * h));
}

inline mmdseg::GramMatrix naive_gram(const mmdseg::Dataset& data, double h) {
  const std::size_t n = data.size();
  std::vector<double> k(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k[i * n + j] = naive_kernel(data[i], data[j], h);
  return mmdseg::GramMatrix(n, std::move(k));
}

/// Biased squared MMD between index sets by three separate double sums.
inline double naive_mmd(const mmdseg::GramMatrix& k, const Index& x, const Index& y) {
  double xx = 0.0, yy = 0.0, xy = 0.0;
  for (std::size_t i : x)
    for (std::size_t j : x) xx += k(i, j);
  for (std::size_t i : y)
    for (std::size_t j : y) yy += k(i, j);
  for (std::size_t i : x)
    for (std::size_t j : y) xy += k(i, j);
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  return xx / (nx * nx) + yy / (ny * ny) - 2.0 * xy / (nx * ny);
}

/// rho at local split t of the view `order`, rebuilt from scratch.
inline double naive_rho(const mmdseg::GramMatrix& k, const Index& order, std::size_t t) {
  const Index left(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
  const Index right(order.begin() + static_cast<std::ptrdiff_t>(t), order.end());
  const double m = static_cast<double>(order.size());
  const double tt = static_cast<double>(t);
  return tt * (m - tt) / (m * m) * naive_mmd(k, left, right);
}

/// Oracle rho at split r for contiguous pools of the given lengths: each side of the split
/// is the mixture of the full pool measures in proportion to how many of its observations
/// fall on that side. Evaluated as w'Kw with explicit weights.
inline double embedding_rho(const mmdseg::GramMatrix& k, const Index& lengths, std::size_t r) {
  const std::size_t n = k.size();
  std::vector<double> w(n, 0.0);
  std::size_t start = 0;
  for (std::size_t len : lengths) {
    const std::size_t end = start + len;
    const std::size_t on_left = r <= start ? 0 : std::min(r, end) - start;
    const std::size_t on_right = len - on_left;
    const double lw = static_cast<double>(on_left) / static_cast<double>(r);
    const double rw = static_cast<double>(on_right) / static_cast<double>(n - r);
    for (std::size_t i = start; i < end; ++i) w[i] = (lw - rw) / static_cast<double>(len);
    start = end;
  }
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += w[i] * k(i, j) * w[j];
  const double nn = static_cast<double>(n);
  const double rr = static_cast<double>(r);
  return rr * (nn - rr) / (nn * nn) * s;
}

inline Index iota(std::size_t begin, std::size_t end) {
  Index v(end - begin);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

inline Index shuffled(std::size_t n, std::uint64_t seed) {
  Index v = iota(0, n);
  std::mt19937_64 gen(seed);
  std::shuffle(v.begin(), v.end(), gen);
  return v;
}

}  // namespace support
