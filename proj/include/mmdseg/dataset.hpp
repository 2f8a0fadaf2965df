#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mmdseg {

/// One discretised observation: function values on a fixed grid.
using Curve = std::span<const double>;

/// Time-ordered sequence of n curves sharing a grid of p points, stored row-major.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::size_t n, std::size_t p);
  Dataset(std::size_t n, std::size_t p, std::vector<double> values);

  std::size_t size() const { return n_; }
  std::size_t grid_size() const { return p_; }
  bool empty() const { return n_ == 0; }

  Curve operator[](std::size_t i) const { return {values_.data() + i * p_, p_}; }
  std::span<double> row(std::size_t i) { return {values_.data() + i * p_, p_}; }

  /// Appends a curve; its length must match the grid size (fixed by the first push on an empty set).
  void push_back(Curve curve);

  /// Copy of the rows listed in `order`, in that order.
  Dataset reordered(std::span<const std::size_t> order) const;

  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  std::vector<double> values_;
};

}  // namespace mmdseg
