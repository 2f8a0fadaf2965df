#include "mmdseg/simgen.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "mmdseg/error.hpp"

namespace mmdseg {

namespace {

constexpr std::uint64_t kTagSimgen = 0x73696D67656EULL;  // "simgen"
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

using MeanFn = std::function<double(double)>;

// A population is either a Brownian bridge plus a mean, or a KL expansion.
struct Population {
  bool bridge = false;
  std::vector<double> bridge_mean;
  KarhunenLoeve kl;
};

std::vector<double> evaluate(const MeanFn& f, const std::vector<double>& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = f(grid[j]);
  return out;
}

std::vector<double> eigen_sequence(std::size_t first, std::size_t last,
                                   const std::function<double(double)>& theta) {
  std::vector<double> v;
  for (std::size_t j = first; j <= last; ++j) v.push_back(theta(static_cast<double>(j)));
  return v;
}

Population bridge(const std::vector<double>& grid, const MeanFn& mean) {
  Population p;
  p.bridge = true;
  p.bridge_mean = evaluate(mean, grid);
  return p;
}

Population kl(std::vector<double> basis, std::vector<double> eigen, const std::vector<double>& grid,
              const MeanFn& mean = nullptr, NoiseLaw noise = NoiseLaw::gaussian,
              std::vector<double> score_means = {}) {
  Population p;
  p.kl.grid_size = grid.size();
  p.kl.basis = std::move(basis);
  p.kl.eigenvalues = std::move(eigen);
  p.kl.score_means = std::move(score_means);
  if (mean) p.kl.mean = evaluate(mean, grid);
  p.kl.noise = noise;
  return p;
}

// Mean functions shared across models.
double quartic_bump(double t) { return 0.5 - 100.0 * (t - 0.1) * (t - 0.3) * (t - 0.5) * (t - 0.9); }
double cubic_trend(double t) { return 1.0 + 3.0 * t * t - 5.0 * t * t * t; }
double oscillation(double t) { return std::sin(1.0 + 10.0 * kPi * t); }

std::vector<double> halving_eigen() {
  return eigen_sequence(0, 150, [](double j) { return 0.7 * std::pow(2.0, -j); });
}
std::vector<double> inverse_square(std::size_t count, double scale = 1.0) {
  return eigen_sequence(1, count, [scale](double j) { return scale / (j * j); });
}
std::vector<double> exp_decay(std::size_t count, double rate) {
  return eigen_sequence(1, count, [rate](double j) { return std::exp(-j * rate); });
}

std::vector<Population> populations(const ModelSpec& spec) {
  const auto grid = unit_grid(spec.grid_size);
  const auto& id = spec.model_id;
  const double c = spec.c;
  auto sine = [&](std::size_t k) { return sine_basis(k, grid); };
  const auto shifted = [&] { return shifted_fourier_basis(75, grid); };

  if (id == "N1") {
    return {kl(shifted(), halving_eigen(), grid,
               [](double t) { return quartic_bump(t) + 0.8 * oscillation(t); })};
  }
  if (id == "N2") return {bridge(grid, [](double) { return 0.0; })};
  if (id == "N3") {
    return {kl(sine(50), exp_decay(50, 1.0 / 3.0), grid, [](double t) { return 2.0 * t; })};
  }
  if (id == "N4") return {kl(sine(40), inverse_square(40), grid)};
  if (id == "1") {
    return {kl(sine(50), exp_decay(50, 1.0 / 3.0), grid, [](double t) { return 2.0 * t; }),
            kl(sine(50), exp_decay(50, 1.0 / 3.0), grid,
               [](double t) { return 6.0 * t * (1.0 - t); })};
  }
  if (id == "2") {
    std::vector<double> shift(40, 0.0);
    for (std::size_t j = 1; j <= 3; ++j) shift[j - 1] = (j % 2 == 1 ? 0.75 : -0.75);
    return {kl(sine(40), inverse_square(40), grid, nullptr, NoiseLaw::t3_unit),
            kl(sine(40), inverse_square(40), grid, nullptr, NoiseLaw::t3_unit, shift)};
  }
  if (id == "3") {
    return {kl(shifted(), halving_eigen(), grid,
               [](double t) { return quartic_bump(t) + 0.8 * oscillation(t); }),
            kl(shifted(), halving_eigen(), grid,
               [](double t) { return cubic_trend(t) + 0.6 * oscillation(t); })};
  }
  if (id == "4") {
    return {bridge(grid, [](double) { return 0.0; }),
            bridge(grid, [](double t) { return std::sin(t); })};
  }
  if (id == "5") return {kl(sine(40), inverse_square(40), grid), kl(sine(40), inverse_square(40, 3.0), grid)};
  if (id == "6") return {kl(sine(50), inverse_square(50), grid), kl(sine(50), exp_decay(50, 1.0), grid)};
  if (id == "7") {
    return {kl(sine(40), inverse_square(40), grid), kl(fourier_basis(40, grid), inverse_square(40), grid)};
  }
  if (id == "8") {
    return {kl(shifted(), halving_eigen(), grid, quartic_bump),
            kl(shifted(), halving_eigen(), grid,
               [](double t) { return cubic_trend(t) + 1.5 * oscillation(t); }),
            kl(shifted(), halving_eigen(), grid, cubic_trend)};
  }
  if (id == "9") {
    return {bridge(grid, [](double) { return 0.0; }), bridge(grid, [](double t) { return t; }),
            bridge(grid, [](double) { return 0.0; })};
  }
  if (id == "10") {
    return {kl(sine(50), inverse_square(50), grid),
            kl(sine(50), eigen_sequence(1, 50, [](double j) { return std::pow(j, -1.05); }), grid),
            kl(sine(50), exp_decay(50, 1.0), grid)};
  }
  if (id == "11") {
    return {kl(sine(40), inverse_square(40), grid, nullptr, NoiseLaw::t3_unit),
            kl(sine(40), inverse_square(40, 3.0), grid, nullptr, NoiseLaw::t3_unit),
            kl(sine(40), inverse_square(40), grid, nullptr, NoiseLaw::t3_unit)};
  }
  if (id == "12") {
    return {kl(sine(40), exp_decay(40, 1.0 / 3.0), grid),
            kl(fourier_basis(40, grid), exp_decay(40, 1.0 / 3.0), grid),
            kl(sine(40), exp_decay(40, 1.0 / 3.0), grid)};
  }
  if (id == "M1") {
    return {bridge(grid, [](double) { return 0.0; }),
            bridge(grid, [c](double t) { return c * std::sin(t); })};
  }
  if (id == "M2") return {kl(sine(40), inverse_square(40), grid), kl(sine(40), inverse_square(40, c), grid)};
  throw ConfigError("unknown model id '" + id + "'");
}

}  // namespace

std::vector<double> unit_grid(std::size_t grid_size) {
  std::vector<double> t(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    t[j] = static_cast<double>(j + 1) / static_cast<double>(grid_size);
  }
  return t;
}

std::vector<double> brownian_bridge(std::size_t grid_size, RandomStream& rng) {
  if (grid_size < 2) throw ConfigError("Brownian bridge needs at least 2 grid points");
  const double step = std::sqrt(1.0 / static_cast<double>(grid_size));
  std::vector<double> w(grid_size);
  double acc = 0.0;
  for (std::size_t j = 0; j < grid_size; ++j) {
    acc += step * rng.normal();
    w[j] = acc;
  }
  const double end = w.back();
  const auto t = unit_grid(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) w[j] -= t[j] * end;
  w.back() = 0.0;
  return w;
}

std::vector<double> sine_basis(std::size_t count, const std::vector<double>& grid) {
  std::vector<double> b(count * grid.size());
  for (std::size_t k = 0; k < count; ++k) {
    const double freq = static_cast<double>(k + 1) * kPi;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      b[k * grid.size() + j] = kSqrt2 * std::sin(freq * grid[j]);
    }
  }
  return b;
}

std::vector<double> shifted_fourier_basis(std::size_t pairs, const std::vector<double>& grid) {
  const std::size_t p = grid.size();
  std::vector<double> b((2 * pairs + 1) * p);
  for (std::size_t j = 0; j < p; ++j) b[j] = 1.0;
  for (std::size_t l = 1; l <= pairs; ++l) {
    const double w = 2.0 * kPi * static_cast<double>(l);
    for (std::size_t j = 0; j < p; ++j) {
      b[(2 * l - 1) * p + j] = kSqrt2 * std::sin(w * grid[j] - kPi);
      b[(2 * l) * p + j] = kSqrt2 * std::cos(w * grid[j] - kPi);
    }
  }
  return b;
}

std::vector<double> fourier_basis(std::size_t count, const std::vector<double>& grid) {
  const std::size_t p = grid.size();
  std::vector<double> b(count * p);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t l = (k + 1) / 2;
    const double w = 2.0 * kPi * static_cast<double>(l);
    for (std::size_t j = 0; j < p; ++j) {
      double v = 1.0;
      if (k > 0) v = (k % 2 == 1) ? kSqrt2 * std::sin(w * grid[j]) : kSqrt2 * std::cos(w * grid[j]);
      b[k * p + j] = v;
    }
  }
  return b;
}

std::vector<double> kl_curve(const KarhunenLoeve& process, RandomStream& rng) {
  const std::size_t p = process.grid_size;
  const std::size_t terms = process.terms();
  if (process.basis.size() != terms * p) {
    throw DimensionError("basis holds " + std::to_string(process.basis.size()) + " values, expected " +
                         std::to_string(terms * p));
  }
  if (!process.score_means.empty() && process.score_means.size() != terms) {
    throw DimensionError("score means must match the number of basis terms");
  }
  if (!process.mean.empty() && process.mean.size() != p) {
    throw DimensionError("mean function must match the grid size");
  }
  std::vector<double> x = process.mean.empty() ? std::vector<double>(p, 0.0) : process.mean;
  for (std::size_t k = 0; k < terms; ++k) {
    const double theta = process.eigenvalues[k];
    if (theta < 0.0) throw ConfigError("eigenvalues must be nonnegative");
    const double w = process.noise == NoiseLaw::gaussian ? rng.normal() : rng.student_t3_unit();
    double score = std::sqrt(theta) * w;
    if (!process.score_means.empty()) score += process.score_means[k];
    if (score == 0.0) continue;
    const double* phi = process.basis.data() + k * p;
    for (std::size_t j = 0; j < p; ++j) x[j] += score * phi[j];
  }
  return x;
}

const std::vector<std::string>& model_ids() {
  static const std::vector<std::string> ids{"N1", "N2", "N3", "N4", "1",  "2",  "3",  "4",
                                            "5",  "6",  "7",  "8",  "9",  "10", "11", "12",
                                            "M1", "M2"};
  return ids;
}

std::size_t population_count(const std::string& model_id) {
  if (model_id.size() == 2 && model_id[0] == 'N' && model_id[1] >= '1' && model_id[1] <= '4') return 1;
  if (model_id == "M1" || model_id == "M2") return 2;
  for (int k = 1; k <= 12; ++k) {
    if (model_id == std::to_string(k)) return k <= 7 ? 2 : 3;
  }
  throw ConfigError("unknown model id '" + model_id + "'");
}

std::vector<std::size_t> breakfraction_lengths(std::size_t n, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("breakfraction must lie in (0, 1)");
  const auto n1 = static_cast<std::size_t>(std::floor(static_cast<double>(n) * gamma));
  if (n1 == 0 || n1 >= n) throw ConfigError("breakfraction leaves an empty segment");
  return {n1, n - n1};
}

void validate(const ModelSpec& spec) {
  const std::size_t pops = population_count(spec.model_id);
  if (spec.segment_lengths.size() != pops) {
    throw ConfigError("model " + spec.model_id + " needs " + std::to_string(pops) +
                      " segment lengths, got " + std::to_string(spec.segment_lengths.size()));
  }
  for (std::size_t len : spec.segment_lengths) {
    if (len == 0) throw ConfigError("segment lengths must be positive");
  }
  if (spec.grid_size < 2) throw ConfigError("grid size must be at least 2");
  if (spec.model_id == "M1" && spec.c < 0.0) throw ConfigError("M1 requires c >= 0");
  if (spec.model_id == "M2" && spec.c < 0.0) throw ConfigError("M2 requires c >= 0");
}

GeneratedSample generate(const ModelSpec& spec) {
  validate(spec);
  const auto pops = populations(spec);
  GeneratedSample out;
  out.model = spec;
  out.truth = Segmentation::from_lengths(spec.segment_lengths);
  const std::size_t n = out.truth.n();
  out.data = Dataset(n, spec.grid_size);
  const std::uint64_t key = derive_key(spec.seed, {kTagSimgen});
  std::size_t i = 0;
  for (std::size_t s = 0; s < pops.size(); ++s) {
    const Population& pop = pops[s];
    for (std::size_t r = 0; r < spec.segment_lengths[s]; ++r, ++i) {
      RandomStream rng(key, i);
      std::vector<double> x;
      if (pop.bridge) {
        x = brownian_bridge(spec.grid_size, rng);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += pop.bridge_mean[j];
      } else {
        x = kl_curve(pop.kl, rng);
      }
      auto row = out.data.row(i);
      std::copy(x.begin(), x.end(), row.begin());
    }
  }
  return out;
}

}  // namespace mmdseg
