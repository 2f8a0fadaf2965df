#include "mmdseg/dataset.hpp"

#include <string>

#include "mmdseg/error.hpp"

namespace mmdseg {

Dataset::Dataset(std::size_t n, std::size_t p) : n_(n), p_(p), values_(n * p, 0.0) {}

Dataset::Dataset(std::size_t n, std::size_t p, std::vector<double> values)
    : n_(n), p_(p), values_(std::move(values)) {
  if (values_.size() != n_ * p_) {
    throw DimensionError("dataset buffer holds " + std::to_string(values_.size()) +
                         " values, expected " + std::to_string(n_ * p_));
  }
}

void Dataset::push_back(Curve curve) {
  if (n_ == 0 && p_ == 0) {
    p_ = curve.size();
  }
  if (curve.size() != p_) {
    throw DimensionError("curve has " + std::to_string(curve.size()) + " grid points, expected " +
                         std::to_string(p_));
  }
  values_.insert(values_.end(), curve.begin(), curve.end());
  ++n_;
}

Dataset Dataset::reordered(std::span<const std::size_t> order) const {
  Dataset out;
  out.p_ = p_;
  out.values_.reserve(order.size() * p_);
  for (std::size_t i : order) {
    if (i >= n_) {
      throw BoundsError("row index " + std::to_string(i) + " out of range");
    }
    auto r = (*this)[i];
    out.values_.insert(out.values_.end(), r.begin(), r.end());
    ++out.n_;
  }
  return out;
}

}  // namespace mmdseg
