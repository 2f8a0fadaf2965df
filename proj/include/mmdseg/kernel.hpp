#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mmdseg/dataset.hpp"

namespace mmdseg {

/// Gaussian kernel bandwidth; always strictly positive.
class Bandwidth {
 public:
  explicit Bandwidth(double h);
  double value() const { return h_; }

 private:
  double h_;
};

/// Riemann approximation of the L2[0,1] distance: sqrt((1/p) * sum (a_j - b_j)^2).
double l2_distance(Curve a, Curve b);

/// Median of the pairwise L2 distances over unordered distinct pairs.
/// Even counts use the midpoint of the two central order statistics.
/// Throws DegenerateBandwidthError when every distance is zero.
Bandwidth median_heuristic(const Dataset& data);

/// exp(-||a-b||^2 / (2 h^2)).
double gaussian_kernel(Curve a, Curve b, Bandwidth h);

/// Dense symmetric n x n matrix of kernel evaluations. Immutable once built;
/// every split statistic and permutation reads from the same instance.
class GramMatrix {
 public:
  GramMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

  /// Sum of every entry.
  double total() const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Requires n >= 2.
GramMatrix gram_matrix(const Dataset& data, Bandwidth h);

}  // namespace mmdseg
