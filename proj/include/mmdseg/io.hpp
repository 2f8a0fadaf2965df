#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "mmdseg/dataset.hpp"
#include "mmdseg/desc.hpp"
#include "mmdseg/metrics.hpp"
#include "mmdseg/simgen.hpp"

namespace mmdseg {

/// Reads a rectangular numeric CSV, one observation per row. A first line containing any
/// non-numeric cell is treated as a header. Errors name the offending row and column
/// (1-based, counting physical lines).
Dataset parse_csv(std::istream& in, const std::string& source = "<input>");
Dataset load_csv(const std::string& path);

/// Full-precision ("%.17g") decimal.
std::string format_double(double v);

/// One row per curve, comma-separated, 17 significant digits.
void write_csv(std::ostream& out, const Dataset& data);

nlohmann::json to_json(const Segmentation& s);
nlohmann::json to_json(const TraceRecord& r);
nlohmann::json to_json(const DescTrace& t);
nlohmann::json to_json(const AmocConfig& c);
nlohmann::json to_json(const ModelSpec& m);
nlohmann::json to_json(const CellReport& r, bool include_timing);
nlohmann::json to_json(const BenchmarkReport& r, bool include_timing);

/// Per-boundary summary pulled from the trace: the statistic and p-value of the decision
/// that produced or retained each final boundary.
nlohmann::json boundary_decisions(const DescResult& result);

}  // namespace mmdseg
