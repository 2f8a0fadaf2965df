#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmdseg/amoc.hpp"
#include "mmdseg/dataset.hpp"
#include "mmdseg/kernel.hpp"
#include "mmdseg/segmentation.hpp"

namespace mmdseg {

enum class TraceAction {
  test,       // permutation test on a block (DESC-U / forward)
  split,      // block split at its rho argmax
  too_short,  // block has no admissible split
  candidate,  // DESC-S: best split of a group, scored by rho
  keep,       // DESC-S: the candidate with the largest rho survives as a new boundary
  merge,      // DESC-S: candidate undone; DESC-SS: adjacent pair merged
  pair_test,  // DESC-SS: permutation test on two adjacent segments
  stop,       // DESC-SS: loop termination
};

const char* to_string(TraceAction action);

/// One audited decision. Positions are in full-sequence coordinates.
struct TraceRecord {
  TraceAction action = TraceAction::test;
  std::size_t stage = 0;  // recursion depth (U), iteration i (S), or m (SS)
  Segment block;
  std::optional<std::size_t> split;
  std::optional<double> rho;
  std::optional<double> p_value;
  std::optional<double> threshold;
};

using DescTrace = std::vector<TraceRecord>;

struct DescResult {
  Segmentation segmentation;
  DescTrace trace;
};

/// Recursive binary segmentation gated by the permutation test. Depth-first, left child
/// first. Block [b, e) draws its permutations from stream key derive(b, e).
DescResult desc_u(const GramMatrix& gram, const AmocConfig& config);

/// Fixed budget of K changepoints: each round splits every group at its rho argmax and
/// keeps only the split with the largest rho. Throws ConfigError when n < 2(K+1) or when
/// no group can be split.
DescResult desc_s(const GramMatrix& gram, std::size_t k, double delta);

/// desc_s at K_u, then backward elimination: merge the adjacent pair with the largest
/// permutation p-value until every p-value is below alpha / (K_u - m + 1) or K_l is reached.
DescResult desc_ss(const GramMatrix& gram, std::size_t k_lower, std::size_t k_upper,
                   const AmocConfig& config);

/// desc_s at K_l, then desc_u independently inside each segment. K_l = 0 is plain desc_u.
DescResult desc_forward(const GramMatrix& gram, std::size_t k_lower, const AmocConfig& config);

/// Dataset front ends. Without an explicit bandwidth the median heuristic over the whole
/// dataset is used, and one Gram matrix serves the entire run.
DescResult desc_u(const Dataset& data, const AmocConfig& config,
                  std::optional<Bandwidth> h = std::nullopt);
DescResult desc_s(const Dataset& data, std::size_t k, double delta,
                  std::optional<Bandwidth> h = std::nullopt);
DescResult desc_ss(const Dataset& data, std::size_t k_lower, std::size_t k_upper,
                   const AmocConfig& config, std::optional<Bandwidth> h = std::nullopt);
DescResult desc_forward(const Dataset& data, std::size_t k_lower, const AmocConfig& config,
                        std::optional<Bandwidth> h = std::nullopt);

}  // namespace mmdseg
