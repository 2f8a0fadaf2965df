#include "mmdseg/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "mmdseg/error.hpp"
#include "mmdseg/mmd.hpp"

namespace mmdseg {

namespace {

void check_r(std::size_t n, std::size_t r) {
  if (r < 1 || r + 1 > n) {
    throw BoundsError("oracle split " + std::to_string(r) + " outside [1, " + std::to_string(n - 1) +
                      "]");
  }
}

}  // namespace

double oracle_rho_single(const GramMatrix& gram, std::size_t n1, std::size_t r) {
  const std::size_t n = gram.size();
  if (n1 < 1 || n1 >= n) {
    throw BoundsError("n1 must lie in [1, n-1]");
  }
  check_r(n, r);
  const auto p1 = block_order(0, n1);
  const auto p2 = block_order(n1, n);
  const double d12 = mmd_squared_groups(gram, p1, p2);

  const double nn = static_cast<double>(n);
  const double a = static_cast<double>(n1);
  const double b = nn - a;
  const double rr = static_cast<double>(r);
  if (r <= n1) {
    return rr * b * b / (nn * nn * (nn - rr)) * d12;
  }
  return a * a * (nn - rr) / (rr * nn * nn) * d12;
}

double oracle_rho_two(const GramMatrix& gram, std::size_t n1, std::size_t n2, std::size_t r) {
  const std::size_t n = gram.size();
  if (n1 < 1 || n2 < 1 || n1 + n2 >= n) {
    throw BoundsError("segment lengths must satisfy n1, n2 >= 1 and n1 + n2 < n");
  }
  check_r(n, r);
  const auto p1 = block_order(0, n1);
  const auto p2 = block_order(n1, n1 + n2);
  const auto p3 = block_order(n1 + n2, n);
  const double d12 = mmd_squared_groups(gram, p1, p2);
  const double d13 = mmd_squared_groups(gram, p1, p3);
  const double d23 = mmd_squared_groups(gram, p2, p3);

  const double nn = static_cast<double>(n);
  const double a = static_cast<double>(n1);
  const double b = static_cast<double>(n2);
  const double c = nn - a - b;
  const double rr = static_cast<double>(r);
  const double n_sq = nn * nn;
  if (r <= n1) {
    return rr / (n_sq * (nn - rr)) * (b * (b + c) * d12 + c * (b + c) * d13 - b * c * d23);
  }
  if (r <= n1 + n2) {
    return (nn * a - rr * (a + c)) / n_sq * (a / rr * d12 - c / (nn - rr) * d23) +
           a * c / n_sq * d13;
  }
  return (nn - rr) / (rr * n_sq) * (b * (a + b) * d23 + a * (a + b) * d13 - a * b * d12);
}

double weighted_mmd_squared(const GramMatrix& gram, std::span<const double> weights_p,
                            std::span<const double> weights_q) {
  const std::size_t n = gram.size();
  if (weights_p.size() != n || weights_q.size() != n) {
    throw DimensionError("weight vectors must match the Gram size");
  }
  // ||mu_p - mu_q||^2 = w' K w with w = p - q.
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = weights_p[i] - weights_q[i];
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] == 0.0) continue;
    const auto row = gram.row(i);
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j) inner += row[j] * w[j];
    s += w[i] * inner;
  }
  return clamp_nonnegative(s);
}

double mixture_mmd(const GramMatrix& gram, std::span<const std::size_t> pool_f,
                   std::span<const std::size_t> pool_g, double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
    throw ConfigError("mixture weights must lie in [0, 1]");
  }
  if (pool_f.empty() || pool_g.empty()) {
    throw ConfigError("mixture pools must be nonempty");
  }
  const std::size_t n = gram.size();
  std::vector<double> p(n, 0.0);
  std::vector<double> q(n, 0.0);
  const double nf = static_cast<double>(pool_f.size());
  const double ng = static_cast<double>(pool_g.size());
  for (std::size_t i : pool_f) {
    if (i >= n) throw BoundsError("pool index out of range");
    p[i] += alpha / nf;
    q[i] += beta / nf;
  }
  for (std::size_t j : pool_g) {
    if (j >= n) throw BoundsError("pool index out of range");
    p[j] += (1.0 - alpha) / ng;
    q[j] += (1.0 - beta) / ng;
  }
  return weighted_mmd_squared(gram, p, q);
}

}  // namespace mmdseg
