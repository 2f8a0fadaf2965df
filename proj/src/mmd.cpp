#include "mmdseg/mmd.hpp"

#include <cmath>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "mmdseg/error.hpp"

namespace mmdseg {

namespace {

constexpr double kNegativeWarning = -1e-9;
// Guards ceil/floor against representation error in m*delta (e.g. 100*0.05).
constexpr double kRangeSlack = 1e-9;

void check_split(std::size_t m, std::size_t r) {
  if (r < 1 || r + 1 > m) {
    throw BoundsError("split " + std::to_string(r) + " outside [1, " + std::to_string(m - 1) + "]");
  }
}

// Visits the block sums for r = 1..last in order. Moving element x = order[r-1] from
// the right block to the left block with a = K(x, left) and b = K(x, right \ x):
//   left += 2a + k(x,x),  cross += b - a,  right -= 2b + k(x,x).
template <typename Visit>
void sweep(const GramMatrix& gram, std::span<const std::size_t> order, std::size_t last,
           Visit&& visit) {
  const std::size_t m = order.size();
  std::vector<double> row_total(m, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto row = gram.row(order[k]);
    double s = 0.0;
    for (std::size_t l = 0; l < m; ++l) s += row[order[l]];
    row_total[k] = s;
    total += s;
  }
  BlockSums sums{0.0, total, 0.0, 0};
  for (std::size_t r = 1; r <= last; ++r) {
    const std::size_t x = order[r - 1];
    const auto row = gram.row(x);
    double a = 0.0;
    for (std::size_t i = 0; i + 1 < r; ++i) a += row[order[i]];
    const double self = row[x];
    const double b = row_total[r - 1] - a - self;
    sums.within_left += 2.0 * a + self;
    sums.cross += b - a;
    sums.within_right -= 2.0 * b + self;
    sums.split = r;
    visit(sums);
  }
}

}  // namespace

double clamp_nonnegative(double value) {
  if (value >= 0.0) return value;
  if (value < kNegativeWarning) {
    std::clog << "mmdseg: warning: clamping negative MMD estimate " << value << " to zero\n";
  }
  return 0.0;
}

std::optional<SplitRange> boundary_range(std::size_t m, double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw ConfigError("boundary fraction delta must lie in (0, 1/2), got " + std::to_string(delta));
  }
  if (m < 2) return std::nullopt;
  const double md = static_cast<double>(m);
  auto lo = static_cast<std::size_t>(std::ceil(md * delta - kRangeSlack));
  auto hi = static_cast<std::size_t>(std::floor(md * (1.0 - delta) + kRangeSlack));
  lo = std::max<std::size_t>(lo, 1);
  hi = std::min(hi, m - 1);
  if (lo > hi) return std::nullopt;
  return SplitRange{lo, hi};
}

std::vector<std::size_t> identity_order(std::size_t n) { return block_order(0, n); }

std::vector<std::size_t> block_order(std::size_t begin, std::size_t end) {
  std::vector<std::size_t> v(end > begin ? end - begin : 0);
  std::iota(v.begin(), v.end(), begin);
  return v;
}

BlockSums block_sums(const GramMatrix& gram, std::span<const std::size_t> order, std::size_t r) {
  const std::size_t m = order.size();
  check_split(m, r);
  BlockSums s;
  s.split = r;
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = gram.row(order[i]);
    for (std::size_t j = 0; j < m; ++j) {
      const double v = row[order[j]];
      if (i < r && j < r) {
        s.within_left += v;
      } else if (i >= r && j >= r) {
        s.within_right += v;
      } else if (i < r) {
        s.cross += v;
      }
    }
  }
  return s;
}

std::vector<BlockSums> block_sums_sweep(const GramMatrix& gram, std::span<const std::size_t> order) {
  std::vector<BlockSums> out;
  if (order.size() < 2) return out;
  out.reserve(order.size() - 1);
  sweep(gram, order, order.size() - 1, [&](const BlockSums& s) { out.push_back(s); });
  return out;
}

double mmd_squared_from_sums(const BlockSums& sums, std::size_t m) {
  check_split(m, sums.split);
  const double left = static_cast<double>(sums.split);
  const double right = static_cast<double>(m - sums.split);
  const double v = sums.within_left / (left * left) + sums.within_right / (right * right) -
                   2.0 * sums.cross / (left * right);
  return clamp_nonnegative(v);
}

double mmd_squared_split(const GramMatrix& gram, std::size_t r) {
  const auto order = identity_order(gram.size());
  return mmd_squared_split(gram, order, r);
}

double mmd_squared_split(const GramMatrix& gram, std::span<const std::size_t> order, std::size_t r) {
  return mmd_squared_from_sums(block_sums(gram, order, r), order.size());
}

double mmd_squared_groups(const GramMatrix& gram, std::span<const std::size_t> group_a,
                          std::span<const std::size_t> group_b) {
  if (group_a.empty() || group_b.empty()) {
    throw ConfigError("MMD groups must be nonempty");
  }
  const std::size_t n = gram.size();
  std::vector<char> member(n, 0);
  for (std::size_t i : group_a) {
    if (i >= n) throw BoundsError("group index " + std::to_string(i) + " out of range");
    member[i] = 1;
  }
  for (std::size_t j : group_b) {
    if (j >= n) throw BoundsError("group index " + std::to_string(j) + " out of range");
    if (member[j] == 1) throw ConfigError("MMD groups overlap at index " + std::to_string(j));
  }
  auto block = [&](std::span<const std::size_t> u, std::span<const std::size_t> v) {
    double s = 0.0;
    for (std::size_t i : u) {
      const auto row = gram.row(i);
      for (std::size_t j : v) s += row[j];
    }
    return s;
  };
  const double na = static_cast<double>(group_a.size());
  const double nb = static_cast<double>(group_b.size());
  const double v = block(group_a, group_a) / (na * na) + block(group_b, group_b) / (nb * nb) -
                   2.0 * block(group_a, group_b) / (na * nb);
  return clamp_nonnegative(v);
}

RhoCurve rho_curve(const GramMatrix& gram, std::span<const std::size_t> order, SplitRange range) {
  const std::size_t m = order.size();
  if (m < 2 || range.t_min < 1 || range.t_min > range.t_max || range.t_max + 1 > m) {
    throw ConfigError("empty or invalid split range for a block of " + std::to_string(m));
  }
  RhoCurve curve;
  curve.t_min = range.t_min;
  curve.t_max = range.t_max;
  curve.values.reserve(range.t_max - range.t_min + 1);
  const double md = static_cast<double>(m);
  bool first = true;
  sweep(gram, order, range.t_max, [&](const BlockSums& s) {
    if (s.split < range.t_min) return;
    const double t = static_cast<double>(s.split);
    const double rho = t * (md - t) / (md * md) * mmd_squared_from_sums(s, m);
    curve.values.push_back(rho);
    if (first || rho > curve.max_value) {
      curve.max_value = rho;
      curve.argmax_t = s.split;
      first = false;
    }
  });
  return curve;
}

RhoCurve rho_curve(const GramMatrix& gram, double delta, std::span<const std::size_t> order) {
  const auto range = boundary_range(order.size(), delta);
  if (!range) {
    throw ConfigError("no admissible split for a block of " + std::to_string(order.size()) +
                      " under delta " + std::to_string(delta));
  }
  return rho_curve(gram, order, *range);
}

}  // namespace mmdseg
