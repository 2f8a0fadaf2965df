#include "mmdseg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "mmdseg/error.hpp"

namespace mmdseg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool parse_number(std::string_view cell, double& value) {
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  return res.ec == std::errc() && res.ptr == cell.data() + cell.size() && std::isfinite(value);
}

std::string location(const std::string& source, std::size_t line, std::size_t col) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(col);
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json rate_json(const Rate& r) {
  return {{"rate", r.value}, {"standard_error", r.standard_error}};
}

}  // namespace

Dataset parse_csv(std::istream& in, const std::string& source) {
  Dataset data;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_cells(line);
    row.assign(cells.size(), 0.0);
    std::size_t bad = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_number(cells[c], row[c])) {
        bad = c;
        break;
      }
    }
    if (bad < cells.size()) {
      if (!seen_content) {
        seen_content = true;  // header
        continue;
      }
      throw DataError(location(source, line_no, bad + 1) + ": non-numeric cell '" +
                      std::string(cells[bad]) + "'");
    }
    seen_content = true;
    if (!data.empty() && row.size() != data.grid_size()) {
      throw DataError(location(source, line_no, 1) + ": row " + std::to_string(line_no) + " has " +
                      std::to_string(row.size()) + " columns, expected " +
                      std::to_string(data.grid_size()));
    }
    data.push_back(row);
  }
  if (data.empty()) {
    throw DataError(source + ": no numeric rows");
  }
  return data;
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return parse_csv(in, path);
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Dataset& data) {
  std::string line;
  for (std::size_t i = 0; i < data.size(); ++i) {
    line.clear();
    const auto row = data[i];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += ',';
      line += format_double(row[j]);
    }
    line += '\n';
    out << line;
  }
}

nlohmann::json to_json(const Segmentation& s) {
  nlohmann::json segs = nlohmann::json::array();
  for (const Segment& g : s.segments()) segs.push_back({g.begin, g.end});
  return {{"n", s.n()},
          {"K_hat", s.count()},
          {"boundaries", s.boundaries()},
          {"breakfractions", s.breakfractions()},
          {"segments", segs}};
}

nlohmann::json to_json(const TraceRecord& r) {
  return {{"action", to_string(r.action)},
          {"stage", r.stage},
          {"begin", r.block.begin},
          {"end", r.block.end},
          {"split", optional_json(r.split)},
          {"rho", optional_json(r.rho)},
          {"p_value", optional_json(r.p_value)},
          {"threshold", optional_json(r.threshold)}};
}

nlohmann::json to_json(const DescTrace& t) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : t) a.push_back(to_json(r));
  return a;
}

nlohmann::json to_json(const AmocConfig& c) {
  return {{"delta", c.delta},
          {"permutations", c.permutations},
          {"alpha", c.alpha},
          {"seed", c.seed},
          {"p_value_rule", c.p_value_rule == PValueRule::strict ? "strict" : "add-one"}};
}

nlohmann::json to_json(const ModelSpec& m) {
  return {{"model", m.model_id},
          {"segment_lengths", m.segment_lengths},
          {"c", m.c},
          {"grid_size", m.grid_size},
          {"seed", m.seed}};
}

nlohmann::json to_json(const CellReport& r, bool include_timing) {
  const BenchmarkCell& c = r.cell;
  nlohmann::json cell = {{"model", to_json(c.model)},
                         {"algorithm", to_string(c.algorithm)},
                         {"config", to_json(c.config)},
                         {"bandwidth", optional_json(c.bandwidth)}};
  cell["model"].erase("seed");
  cell["config"].erase("seed");
  switch (c.algorithm) {
    case Algorithm::supervised: cell["K"] = c.k; break;
    case Algorithm::semi_supervised:
      cell["K_lower"] = c.k_lower;
      cell["K_upper"] = c.k_upper;
      break;
    case Algorithm::forward: cell["K_lower"] = c.k_lower; break;
    case Algorithm::unsupervised: break;
  }
  nlohmann::json j = {{"cell", cell},
                      {"replications", r.replications},
                      {"k_correct", rate_json(r.k_correct)},
                      {"detected", rate_json(r.detected)},
                      {"match", rate_json(r.match)},
                      {"superset", rate_json(r.superset)},
                      {"subset", rate_json(r.subset)},
                      {"mean_hausdorff", optional_json(r.mean_hausdorff)},
                      {"k_hat_counts", r.k_hat_counts}};
  if (include_timing) {
    j["mean_seconds"] = r.mean_seconds;
    j["max_seconds"] = r.max_seconds;
  }
  return j;
}

nlohmann::json to_json(const BenchmarkReport& r, bool include_timing) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c, include_timing));
  return {{"seed", r.seed}, {"cells", cells}};
}

nlohmann::json boundary_decisions(const DescResult& result) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t b : result.segmentation.boundaries()) {
    const TraceRecord* found = nullptr;
    for (const auto& r : result.trace) {
      if (r.split != b) continue;
      if (r.action == TraceAction::split || r.action == TraceAction::keep ||
          r.action == TraceAction::pair_test) {
        found = &r;
      }
    }
    nlohmann::json d = {{"boundary", b},
                        {"breakfraction", static_cast<double>(b) /
                                              static_cast<double>(result.segmentation.n())},
                        {"decision", nullptr},
                        {"rho", nullptr},
                        {"p_value", nullptr}};
    if (found) {
      d["decision"] = to_string(found->action);
      d["rho"] = optional_json(found->rho);
      d["p_value"] = optional_json(found->p_value);
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace mmdseg
