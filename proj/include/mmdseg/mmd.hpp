#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mmdseg/kernel.hpp"

namespace mmdseg {

/// The three Gram double sums for a split of an ordered block into its first `split`
/// elements and the rest.
struct BlockSums {
  double within_left = 0.0;
  double within_right = 0.0;
  double cross = 0.0;
  std::size_t split = 0;
};

/// Inclusive range of admissible local split positions; a split t puts the first t
/// elements of the block on the left.
struct SplitRange {
  std::size_t t_min = 0;
  std::size_t t_max = 0;
};

/// ceil(m*delta) .. floor(m*(1-delta)), clipped to [1, m-1]. Empty ranges yield nullopt.
/// Throws ConfigError unless 0 < delta < 1/2.
std::optional<SplitRange> boundary_range(std::size_t m, double delta);

/// Split statistic over a block, indexed by local split position.
struct RhoCurve {
  std::size_t t_min = 0;
  std::size_t t_max = 0;
  std::vector<double> values;  // values[t - t_min]
  std::size_t argmax_t = 0;    // smallest maximiser
  double max_value = 0.0;

  double at(std::size_t t) const { return values.at(t - t_min); }
};

/// Identity view 0..n-1.
std::vector<std::size_t> identity_order(std::size_t n);
/// Identity view over the contiguous block [begin, end).
std::vector<std::size_t> block_order(std::size_t begin, std::size_t end);

/// Block sums for a view split after `r` elements, by direct summation.
BlockSums block_sums(const GramMatrix& gram, std::span<const std::size_t> order, std::size_t r);

/// Block sums for every split r = 1..m-1 of the view, computed by the incremental sweep.
std::vector<BlockSums> block_sums_sweep(const GramMatrix& gram, std::span<const std::size_t> order);

/// Biased (V-statistic) squared MMD from block sums over a block of m elements.
double mmd_squared_from_sums(const BlockSums& sums, std::size_t m);

/// Squared MMD between the first r observations and the rest. Requires 1 <= r <= n-1.
double mmd_squared_split(const GramMatrix& gram, std::size_t r);
/// As above, over an arbitrary view of global indices.
double mmd_squared_split(const GramMatrix& gram, std::span<const std::size_t> order, std::size_t r);

/// Squared MMD between two nonempty disjoint index sets.
double mmd_squared_groups(const GramMatrix& gram, std::span<const std::size_t> group_a,
                          std::span<const std::size_t> group_b);

/// rho(t) = t(m-t)/m^2 * MMD^2(first t, rest) for every t in `range`, where m = order.size().
/// `order` lists global indices in sequence order; a permuted order reindexes the shared
/// Gram matrix. O(m^2) total.
RhoCurve rho_curve(const GramMatrix& gram, std::span<const std::size_t> order, SplitRange range);
/// Uses boundary_range(order.size(), delta); throws ConfigError if it is empty.
RhoCurve rho_curve(const GramMatrix& gram, double delta, std::span<const std::size_t> order);

/// Clamps round-off negatives to zero; values below -1e-9 are reported on std::clog.
double clamp_nonnegative(double value);

}  // namespace mmdseg
