#include "mmdseg/segmentation.hpp"

#include <string>

#include "mmdseg/error.hpp"

namespace mmdseg {

Segmentation::Segmentation(std::size_t n, std::vector<std::size_t> boundaries)
    : n_(n), boundaries_(std::move(boundaries)) {
  std::size_t prev = 0;
  for (std::size_t b : boundaries_) {
    if (b <= prev || b >= n_) {
      throw ConfigError("boundaries must be strictly increasing within [1, n-1]; got " +
                        std::to_string(b) + " for n = " + std::to_string(n_));
    }
    prev = b;
  }
}

Segmentation Segmentation::from_lengths(const std::vector<std::size_t>& lengths) {
  std::size_t n = 0;
  std::vector<std::size_t> b;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0) throw ConfigError("segment lengths must be positive");
    n += lengths[i];
    if (i + 1 < lengths.size()) b.push_back(n);
  }
  return Segmentation(n, std::move(b));
}

std::vector<Segment> Segmentation::segments() const {
  std::vector<Segment> out;
  std::size_t begin = 0;
  for (std::size_t b : boundaries_) {
    out.push_back({begin, b});
    begin = b;
  }
  out.push_back({begin, n_});
  return out;
}

std::vector<double> Segmentation::breakfractions() const {
  std::vector<double> out;
  out.reserve(boundaries_.size());
  for (std::size_t b : boundaries_) out.push_back(static_cast<double>(b) / static_cast<double>(n_));
  return out;
}

}  // namespace mmdseg
