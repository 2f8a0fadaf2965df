#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mmdseg/dataset.hpp"
#include "mmdseg/random.hpp"
#include "mmdseg/segmentation.hpp"

namespace mmdseg {

/// Equispaced right-closed grid t_j = j/p, j = 1..p, so t = 1 is a grid point.
std::vector<double> unit_grid(std::size_t grid_size);

/// Discrete standard Brownian bridge W(t_j) - t_j W(1), with W a Gaussian random walk of
/// increments Normal(0, 1/p). Requires grid_size >= 2; exactly zero at t = 1.
std::vector<double> brownian_bridge(std::size_t grid_size, RandomStream& rng);

enum class NoiseLaw { gaussian, t3_unit };

/// Truncated Karhunen-Loeve process
///   X(t) = mean(t) + sum_k (sqrt(eigenvalue_k) W_k + score_mean_k) phi_k(t).
struct KarhunenLoeve {
  std::size_t grid_size = 0;
  std::vector<double> basis;        // terms x grid_size, row-major
  std::vector<double> eigenvalues;  // one per term, >= 0
  std::vector<double> score_means;  // empty or one per term
  std::vector<double> mean;         // empty (zero) or grid_size values
  NoiseLaw noise = NoiseLaw::gaussian;

  std::size_t terms() const { return eigenvalues.size(); }
};

/// phi_j(t) = sqrt(2) sin(j pi t), j = 1..count.
std::vector<double> sine_basis(std::size_t count, const std::vector<double>& grid);
/// phi_0 = 1, phi_{2l-1} = sqrt(2) sin(2 pi l t - pi), phi_{2l} = sqrt(2) cos(2 pi l t - pi),
/// for l = 1..pairs (2*pairs + 1 functions).
std::vector<double> shifted_fourier_basis(std::size_t pairs, const std::vector<double>& grid);
/// First `count` functions of the standard Fourier basis on [0,1]:
/// 1, sqrt(2) sin(2 pi t), sqrt(2) cos(2 pi t), sqrt(2) sin(4 pi t), ...
std::vector<double> fourier_basis(std::size_t count, const std::vector<double>& grid);

/// One draw of the process. Throws DimensionError on inconsistent sizes and ConfigError
/// on negative eigenvalues.
std::vector<double> kl_curve(const KarhunenLoeve& process, RandomStream& rng);

/// A simulation model: one of N1-N4, M1, M2, 1-12.
struct ModelSpec {
  std::string model_id;
  std::vector<std::size_t> segment_lengths;
  double c = 1.0;  // signal parameter of M1 / M2
  std::size_t grid_size = 128;
  std::uint64_t seed = 0;
};

/// Known model identifiers in catalogue order.
const std::vector<std::string>& model_ids();

/// Number of populations (true changepoints + 1) of a model; throws ConfigError when unknown.
std::size_t population_count(const std::string& model_id);

/// Segment lengths for a single change at floor(n * gamma) (used by M1 / M2 sweeps).
std::vector<std::size_t> breakfraction_lengths(std::size_t n, double gamma);

/// Throws ConfigError for unknown ids or inconsistent lengths.
void validate(const ModelSpec& spec);

struct GeneratedSample {
  Dataset data;
  Segmentation truth;
  ModelSpec model;
};

/// Draws every segment from its population in order. Curve i uses the stream
/// (derive_key(seed, {"simgen"}), i), so any curve can be regenerated on its own.
GeneratedSample generate(const ModelSpec& spec);

}  // namespace mmdseg
