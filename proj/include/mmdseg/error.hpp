#pragma once

#include <stdexcept>
#include <string>

namespace mmdseg {

/// Invalid parameters or inconsistent options (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or unusable input data (CLI exit code 3).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Curves of different grid sizes were combined.
class DimensionError : public DataError {
 public:
  using DataError::DataError;
};

/// Every pairwise distance is zero, so no bandwidth can be derived.
class DegenerateBandwidthError : public DataError {
 public:
  using DataError::DataError;
};

/// Index or split position outside its valid range.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace mmdseg
