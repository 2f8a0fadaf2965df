#pragma once

#include <cstddef>
#include <vector>

namespace mmdseg {

/// Half-open block [begin, end) of the observation sequence.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Partition of n observations by changepoints. A boundary b means observations
/// [0, b) and [b, ...) fall on different sides, so b is also the left-hand count.
class Segmentation {
 public:
  Segmentation() = default;
  /// Boundaries must be strictly increasing in [1, n-1]; throws ConfigError otherwise.
  Segmentation(std::size_t n, std::vector<std::size_t> boundaries);

  /// Builds from consecutive segment lengths (all >= 1).
  static Segmentation from_lengths(const std::vector<std::size_t>& lengths);

  std::size_t n() const { return n_; }
  std::size_t count() const { return boundaries_.size(); }
  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::vector<Segment> segments() const;
  std::vector<double> breakfractions() const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> boundaries_;
};

}  // namespace mmdseg
