#include "mmdseg/desc.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "mmdseg/error.hpp"
#include "mmdseg/random.hpp"

namespace mmdseg {

namespace {

// Stream-key tags keep the permutation streams of different procedures apart.
constexpr std::uint64_t kTagUnsupervised = 0x55;
constexpr std::uint64_t kTagPairs = 0x5353;

constexpr double kUnsplittable = -std::numeric_limits<double>::infinity();

std::uint64_t block_key(Segment s) { return derive_key(kTagUnsupervised, {s.begin, s.end}); }

// Depth-first recursion of DESC-U inside `block`; appends accepted boundaries.
void split_recursively(const GramMatrix& gram, Segment block, std::size_t depth,
                       const AmocConfig& config, std::vector<std::size_t>& boundaries,
                       DescTrace& trace) {
  const AmocDetection det = amoc_detect(gram, block.begin, block.end, config, block_key(block));
  if (det.status == AmocStatus::too_short) {
    trace.push_back({TraceAction::too_short, depth, block, std::nullopt, std::nullopt,
                     std::nullopt, std::nullopt});
    return;
  }
  const AmocResult& t = *det.test;
  trace.push_back({TraceAction::test, depth, block, block.begin + t.tau, t.statistic, t.p_value,
                   config.alpha});
  if (!det.changepoint) return;
  const std::size_t cp = *det.changepoint;
  trace.push_back({TraceAction::split, depth, block, cp, t.statistic, t.p_value, config.alpha});
  boundaries.push_back(cp);
  split_recursively(gram, {block.begin, cp}, depth + 1, config, boundaries, trace);
  split_recursively(gram, {cp, block.end}, depth + 1, config, boundaries, trace);
}

Segmentation sorted_segmentation(std::size_t n, std::vector<std::size_t> boundaries) {
  std::sort(boundaries.begin(), boundaries.end());
  return Segmentation(n, std::move(boundaries));
}

struct Candidate {
  double rho = kUnsplittable;
  std::size_t split = 0;  // global
};

Candidate best_split(const GramMatrix& gram, Segment group, double delta) {
  if (!amoc_range(group.size(), delta)) return {};
  const auto order = block_order(group.begin, group.end);
  const AmocStatistic s = amoc_statistic(gram, delta, order);
  return {s.value, group.begin + s.tau};
}

void check_gram(const GramMatrix& gram) {
  if (gram.size() < 4) {
    throw ConfigError("at least 4 observations are required");
  }
}

GramMatrix build_gram(const Dataset& data, std::optional<Bandwidth> h) {
  if (data.size() < 4) throw DataError("at least 4 observations are required");
  const Bandwidth bw = h ? *h : median_heuristic(data);
  return gram_matrix(data, bw);
}

}  // namespace

const char* to_string(TraceAction action) {
  switch (action) {
    case TraceAction::test: return "test";
    case TraceAction::split: return "split";
    case TraceAction::too_short: return "too_short";
    case TraceAction::candidate: return "candidate";
    case TraceAction::keep: return "keep";
    case TraceAction::merge: return "merge";
    case TraceAction::pair_test: return "pair_test";
    case TraceAction::stop: return "stop";
  }
  return "unknown";
}

DescResult desc_u(const GramMatrix& gram, const AmocConfig& config) {
  validate(config);
  check_gram(gram);
  DescResult out;
  std::vector<std::size_t> boundaries;
  split_recursively(gram, {0, gram.size()}, 0, config, boundaries, out.trace);
  out.segmentation = sorted_segmentation(gram.size(), std::move(boundaries));
  return out;
}

DescResult desc_s(const GramMatrix& gram, std::size_t k, double delta) {
  check_gram(gram);
  const std::size_t n = gram.size();
  if (k < 1) throw ConfigError("DESC-S needs K >= 1");
  if (n < 2 * (k + 1)) {
    throw ConfigError("K = " + std::to_string(k) + " is infeasible for n = " + std::to_string(n));
  }
  if (!(delta > 0.0 && delta < 0.5)) throw ConfigError("delta must lie in (0, 1/2)");

  DescResult out;
  std::vector<Segment> groups{{0, n}};
  std::map<std::pair<std::size_t, std::size_t>, Candidate> cache;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Candidate> cand(groups.size());
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const auto key = std::make_pair(groups[j].begin, groups[j].end);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, best_split(gram, groups[j], delta)).first;
      cand[j] = it->second;
    }
    // Ascending rho, ties by leftmost group; the first i pairs are merged back and the
    // last one keeps its split.
    std::vector<std::size_t> rank(groups.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(),
                     [&](std::size_t a, std::size_t b) { return cand[a].rho < cand[b].rho; });
    const std::size_t kept = rank.back();
    if (cand[kept].rho == kUnsplittable) {
      throw ConfigError("budget infeasible: no group can be split at iteration " +
                        std::to_string(i));
    }
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const bool splittable = cand[j].rho != kUnsplittable;
      TraceRecord rec{TraceAction::candidate, i, groups[j], std::nullopt, std::nullopt,
                      std::nullopt, std::nullopt};
      if (splittable) {
        rec.split = cand[j].split;
        rec.rho = cand[j].rho;
      } else {
        rec.action = TraceAction::too_short;
      }
      out.trace.push_back(rec);
    }
    for (std::size_t c = 0; c + 1 < rank.size(); ++c) {
      const std::size_t j = rank[c];
      if (cand[j].rho == kUnsplittable) continue;
      out.trace.push_back({TraceAction::merge, i, groups[j], cand[j].split, cand[j].rho,
                           std::nullopt, std::nullopt});
    }
    const Segment g = groups[kept];
    out.trace.push_back({TraceAction::keep, i, g, cand[kept].split, cand[kept].rho, std::nullopt,
                         std::nullopt});
    groups[kept] = {g.begin, cand[kept].split};
    groups.insert(groups.begin() + static_cast<std::ptrdiff_t>(kept) + 1, {cand[kept].split, g.end});
  }
  std::vector<std::size_t> b;
  for (std::size_t j = 0; j + 1 < groups.size(); ++j) b.push_back(groups[j].end);
  out.segmentation = Segmentation(n, std::move(b));
  return out;
}

DescResult desc_ss(const GramMatrix& gram, std::size_t k_lower, std::size_t k_upper,
                   const AmocConfig& config) {
  validate(config);
  if (k_lower > k_upper) {
    throw ConfigError("K_l = " + std::to_string(k_lower) + " exceeds K_u = " +
                      std::to_string(k_upper));
  }
  if (k_upper < 1) throw ConfigError("DESC-SS needs K_u >= 1");
  DescResult out = desc_s(gram, k_upper, config.delta);
  std::vector<Segment> segs = out.segmentation.segments();

  for (std::size_t m = 1;; ++m) {
    if (m == k_upper - k_lower + 1) {
      out.trace.push_back({TraceAction::stop, m, {0, gram.size()}, std::nullopt, std::nullopt,
                           std::nullopt, std::nullopt});
      break;
    }
    const std::size_t tests = k_upper - m + 1;
    const double threshold = config.alpha / static_cast<double>(tests);
    std::vector<double> p(segs.size() - 1, 1.0);
    for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
      const Segment pair{segs[i].begin, segs[i + 1].end};
      const AmocDetection det = amoc_detect(gram, pair.begin, pair.end, config,
                                            derive_key(kTagPairs, {m, i}));
      TraceRecord rec{TraceAction::pair_test, m, pair, segs[i].end, std::nullopt, std::nullopt,
                      threshold};
      if (det.test) {
        p[i] = det.test->p_value;
        rec.rho = det.test->statistic;
        rec.p_value = p[i];
      } else {
        rec.action = TraceAction::too_short;
      }
      out.trace.push_back(rec);
    }
    // Leftmost pair wins ties.
    const auto worst = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin());
    if (p[worst] < threshold) {
      out.trace.push_back({TraceAction::stop, m, {0, gram.size()}, std::nullopt, std::nullopt,
                           p[worst], threshold});
      break;
    }
    out.trace.push_back({TraceAction::merge, m, {segs[worst].begin, segs[worst + 1].end},
                         segs[worst].end, std::nullopt, p[worst], threshold});
    segs[worst].end = segs[worst + 1].end;
    segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(worst) + 1);
  }
  std::vector<std::size_t> b;
  for (std::size_t j = 0; j + 1 < segs.size(); ++j) b.push_back(segs[j].end);
  out.segmentation = Segmentation(gram.size(), std::move(b));
  return out;
}

DescResult desc_forward(const GramMatrix& gram, std::size_t k_lower, const AmocConfig& config) {
  validate(config);
  if (k_lower == 0) return desc_u(gram, config);
  DescResult out = desc_s(gram, k_lower, config.delta);
  std::vector<std::size_t> boundaries = out.segmentation.boundaries();
  for (const Segment& s : out.segmentation.segments()) {
    split_recursively(gram, s, 1, config, boundaries, out.trace);
  }
  out.segmentation = sorted_segmentation(gram.size(), std::move(boundaries));
  return out;
}

DescResult desc_u(const Dataset& data, const AmocConfig& config, std::optional<Bandwidth> h) {
  validate(config);
  return desc_u(build_gram(data, h), config);
}

DescResult desc_s(const Dataset& data, std::size_t k, double delta, std::optional<Bandwidth> h) {
  return desc_s(build_gram(data, h), k, delta);
}

DescResult desc_ss(const Dataset& data, std::size_t k_lower, std::size_t k_upper,
                   const AmocConfig& config, std::optional<Bandwidth> h) {
  validate(config);
  if (k_lower > k_upper) throw ConfigError("K_l exceeds K_u");
  return desc_ss(build_gram(data, h), k_lower, k_upper, config);
}

DescResult desc_forward(const Dataset& data, std::size_t k_lower, const AmocConfig& config,
                        std::optional<Bandwidth> h) {
  validate(config);
  return desc_forward(build_gram(data, h), k_lower, config);
}

}  // namespace mmdseg
