#include "mmdseg/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmdseg/desc.hpp"
#include "mmdseg/error.hpp"
#include "mmdseg/io.hpp"
#include "mmdseg/kernel.hpp"
#include "mmdseg/metrics.hpp"
#include "mmdseg/mmd.hpp"
#include "mmdseg/oracle.hpp"
#include "mmdseg/simgen.hpp"

namespace mmdseg::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splices key=value lines of every --config file in right after the subcommand, so any
// flag given on the command line comes later and wins under TakeLast.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
      continue;
    }
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
      }
      std::string key = trim(line.substr(0, eq));
      while (!key.empty() && key[0] == '-') key.erase(0, 1);
      from_file.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
    }
  }
  if (from_file.empty() || rest.empty()) return rest;
  std::vector<std::string> out;
  out.push_back(rest[0]);
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || item[0] == '-') {
      throw ConfigError(std::string(what) + ": '" + item + "' is not a nonnegative integer");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw ConfigError(std::string(what) + " is empty");
  return out;
}

std::optional<Bandwidth> parse_bandwidth(const std::string& text) {
  if (text == "auto" || text == "median") return std::nullopt;
  std::size_t used = 0;
  double h = 0.0;
  try {
    h = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError("bandwidth must be 'auto' or a positive number, got '" + text + "'");
  }
  return Bandwidth(h);
}

PValueRule parse_rule(const std::string& text) {
  if (text == "strict") return PValueRule::strict;
  if (text == "add-one") return PValueRule::add_one;
  throw ConfigError("p-value rule must be 'strict' or 'add-one', got '" + text + "'");
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw ConfigError("format must be 'json' or 'csv', got '" + format + "'");
  }
}

Dataset read_input(const std::string& path) {
  if (path == "-") return parse_csv(std::cin, "<stdin>");
  return load_csv(path);
}

// Writes to --output when set, otherwise to `out`.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write '" + path + "'");
  file << text;
  if (!file) throw DataError("write to '" + path + "' failed");
}

std::string csv_value(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

struct AmocOptions {
  double delta = 0.05;
  std::size_t permutations = 199;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::string p_value = "strict";
  unsigned workers = 1;
  std::string bandwidth = "auto";

  void add_to(CLI::App& app) {
    app.add_option("--delta", delta, "boundary fraction in (0, 1/2)")->capture_default_str();
    app.add_option("--permutations,-R", permutations, "permutations per test")
        ->capture_default_str();
    app.add_option("--alpha", alpha, "significance level")->capture_default_str();
    app.add_option("--seed", seed, "random seed")->capture_default_str();
    app.add_option("--p-value", p_value, "strict or add-one")->capture_default_str();
    app.add_option("--workers", workers, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--bandwidth", bandwidth, "'auto' (median heuristic) or a positive value")
        ->capture_default_str();
  }

  AmocConfig config() const {
    AmocConfig c;
    c.delta = delta;
    c.permutations = permutations;
    c.alpha = alpha;
    c.seed = seed;
    c.p_value_rule = parse_rule(p_value);
    c.workers = workers;
    validate(c);
    return c;
  }
};

struct ModelOptions {
  std::string model;
  std::string segments;
  std::size_t n = 0;
  double gamma = 0.5;
  double c = 1.0;
  std::size_t grid = 128;

  void add_to(CLI::App& app, bool required) {
    auto* m = app.add_option("--model", model, "model id (N1-N4, M1, M2, 1-12)");
    if (required) m->required();
    app.add_option("--segments", segments, "comma-separated segment lengths");
    app.add_option("--n", n, "sample size for a single change at floor(n*gamma)");
    app.add_option("--gamma", gamma, "breakfraction used with --n")->capture_default_str();
    app.add_option("--c", c, "signal parameter of M1 / M2")->capture_default_str();
    app.add_option("--grid", grid, "grid points per curve")->capture_default_str();
  }

  ModelSpec spec(std::uint64_t seed) const {
    ModelSpec s;
    s.model_id = model;
    s.c = c;
    s.grid_size = grid;
    s.seed = seed;
    if (!segments.empty()) {
      s.segment_lengths = parse_size_list(segments, "--segments");
    } else if (n > 0) {
      if (population_count(model) != 2) {
        throw ConfigError("--n/--gamma only applies to single-change models; use --segments");
      }
      s.segment_lengths = breakfraction_lengths(n, gamma);
    } else {
      throw ConfigError("give --segments or --n");
    }
    validate(s);
    return s;
  }
};

// ---- detect-* ----

struct DetectOptions {
  Algorithm algorithm = Algorithm::unsupervised;
  std::string input;
  AmocOptions amoc;
  std::size_t k = kUnset;
  std::size_t k_lower = 0;
  std::size_t k_upper = kUnset;
  std::string format = "json";
  std::string output;
  bool timing = false;
};

CLI::App* add_detect(CLI::App& app, const std::string& name, const std::string& help,
                     DetectOptions& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--input,-i", o.input, "CSV file, one curve per row ('-' for stdin)")
      ->required();
  o.amoc.add_to(*sub);
  sub->add_option("--format", o.format, "json or csv")->capture_default_str();
  sub->add_option("--output,-o", o.output, "output file (default stdout)");
  sub->add_flag("--timing", o.timing, "include wall-clock seconds in the JSON report");
  switch (o.algorithm) {
    case Algorithm::supervised:
      sub->add_option("--K,-K", o.k, "number of changepoints")->required();
      break;
    case Algorithm::semi_supervised:
      sub->add_option("--K-upper", o.k_upper, "upper bound K_u")->required();
      sub->add_option("--K-lower", o.k_lower, "lower bound K_l")->capture_default_str();
      break;
    case Algorithm::forward:
      sub->add_option("--K-lower", o.k_lower, "changepoints placed before the recursion")
          ->capture_default_str();
      break;
    case Algorithm::unsupervised: break;
  }
  return sub;
}

int run_detect(const DetectOptions& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  const AmocConfig config = o.amoc.config();
  const std::optional<Bandwidth> fixed = parse_bandwidth(o.amoc.bandwidth);
  if (o.algorithm == Algorithm::semi_supervised && o.k_lower > o.k_upper) {
    throw ConfigError("K_l = " + std::to_string(o.k_lower) + " exceeds K_u = " +
                      std::to_string(o.k_upper));
  }

  const Dataset data = read_input(o.input);
  if (data.size() < 4) {
    throw DataError("at least 4 observations are required, got " + std::to_string(data.size()));
  }
  const auto start = Clock::now();
  const Bandwidth h = fixed ? *fixed : median_heuristic(data);
  const GramMatrix gram = gram_matrix(data, h);
  DescResult result;
  switch (o.algorithm) {
    case Algorithm::unsupervised: result = desc_u(gram, config); break;
    case Algorithm::supervised: result = desc_s(gram, o.k, config.delta); break;
    case Algorithm::semi_supervised:
      result = desc_ss(gram, o.k_lower, o.k_upper, config);
      break;
    case Algorithm::forward: result = desc_forward(gram, o.k_lower, config); break;
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

  json report;
  report["algorithm"] = to_string(o.algorithm);
  report["n"] = data.size();
  report["grid_size"] = data.grid_size();
  report["bandwidth"] = h.value();
  report["bandwidth_source"] = fixed ? "fixed" : "median_heuristic";
  json cfg = to_json(config);
  if (o.algorithm == Algorithm::supervised) cfg["K"] = o.k;
  if (o.algorithm == Algorithm::semi_supervised) {
    cfg["K_lower"] = o.k_lower;
    cfg["K_upper"] = o.k_upper;
  }
  if (o.algorithm == Algorithm::forward) cfg["K_lower"] = o.k_lower;
  report["config"] = cfg;
  const json seg = to_json(result.segmentation);
  report["K_hat"] = seg["K_hat"];
  report["boundaries"] = seg["boundaries"];
  report["breakfractions"] = seg["breakfractions"];
  report["segments"] = seg["segments"];
  const json decisions = boundary_decisions(result);
  report["decisions"] = decisions;
  report["trace"] = to_json(result.trace);
  if (o.timing) report["timing_seconds"] = seconds;

  if (o.format == "json") {
    emit(o.output, out, report.dump(2) + "\n");
  } else {
    std::string text = "boundary,breakfraction,decision,rho,p_value\n";
    for (const auto& d : decisions) {
      text += csv_value(d["boundary"]) + "," + csv_value(d["breakfraction"]) + "," +
              csv_value(d["decision"]) + "," + csv_value(d["rho"]) + "," +
              csv_value(d["p_value"]) + "\n";
    }
    emit(o.output, out, text);
  }
  if (!o.timing) err << "{\"timing_seconds\":" << json(seconds).dump() << "}\n";
  return kExitOk;
}

// ---- simulate ----

struct SimulateOptions {
  ModelOptions model;
  std::uint64_t seed = 0;
  std::string output;
  std::string truth;
};

std::string default_truth_path(const std::string& output) {
  const auto slash = output.find_last_of('/');
  const auto dot = output.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return output.substr(0, dot) + ".json";
  }
  return output + ".json";
}

int run_simulate(const SimulateOptions& o, std::ostream& out) {
  const GeneratedSample sample = generate(o.model.spec(o.seed));
  std::ostringstream csv;
  write_csv(csv, sample.data);
  emit(o.output, out, csv.str());

  std::string truth_path = o.truth;
  if (truth_path.empty() && !o.output.empty() && o.output != "-") {
    truth_path = default_truth_path(o.output);
  }
  if (!truth_path.empty()) {
    json sidecar = to_json(sample.truth);
    sidecar["model"] = to_json(sample.model);
    sidecar["grid_size"] = sample.data.grid_size();
    std::ofstream file(truth_path, std::ios::binary);
    if (!file) throw DataError("cannot write '" + truth_path + "'");
    file << sidecar.dump(2) << "\n";
  }
  return kExitOk;
}

// ---- oracle-curve ----

struct OracleOptions {
  std::string input;
  ModelOptions model;
  std::uint64_t seed = 0;
  std::string bandwidth = "auto";
  std::string output;
};

int run_oracle(const OracleOptions& o, std::ostream& out) {
  const std::optional<Bandwidth> fixed = parse_bandwidth(o.bandwidth);
  Dataset data;
  std::vector<std::size_t> lengths;
  if (!o.input.empty()) {
    if (o.model.segments.empty()) {
      throw ConfigError("--input needs --segments giving the true segment lengths");
    }
    lengths = parse_size_list(o.model.segments, "--segments");
    data = read_input(o.input);
  } else if (!o.model.model.empty()) {
    GeneratedSample sample = generate(o.model.spec(o.seed));
    lengths = sample.model.segment_lengths;
    data = std::move(sample.data);
  } else {
    throw ConfigError("give --input or --model");
  }
  std::size_t total = 0;
  for (std::size_t len : lengths) total += len;
  if (total != data.size()) {
    throw DataError("segment lengths sum to " + std::to_string(total) + " but the data has " +
                    std::to_string(data.size()) + " rows");
  }
  if (lengths.size() < 2 || lengths.size() > 3) {
    throw ConfigError("oracle curves exist for one or two changepoints only");
  }
  if (data.size() < 2) throw DataError("at least 2 observations are required");

  const Bandwidth h = fixed ? *fixed : median_heuristic(data);
  const GramMatrix gram = gram_matrix(data, h);
  const std::vector<std::size_t> order = identity_order(data.size());
  const RhoCurve empirical = rho_curve(gram, order, SplitRange{1, data.size() - 1});

  std::string text = "r,rho_star,rho\n";
  for (std::size_t r = 1; r < data.size(); ++r) {
    const double star = lengths.size() == 2 ? oracle_rho_single(gram, lengths[0], r)
                                            : oracle_rho_two(gram, lengths[0], lengths[1], r);
    text += std::to_string(r) + "," + format_double(star) + "," +
            format_double(empirical.at(r)) + "\n";
  }
  emit(o.output, out, text);
  return kExitOk;
}

// ---- benchmark ----

struct BenchmarkOptions {
  std::string cells;
  ModelOptions model;
  std::string algorithm = "u";
  AmocOptions amoc;
  std::size_t k = kUnset;
  std::size_t k_lower = 0;
  std::size_t k_upper = kUnset;
  std::size_t replications = 100;
  std::string format = "json";
  std::string output;
  bool timing = false;
};

template <typename T>
T field(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<T>();
}

BenchmarkCell cell_from_json(const json& j, const BenchmarkOptions& defaults) {
  if (!j.is_object()) throw ConfigError("each benchmark cell must be a JSON object");
  ModelOptions m = defaults.model;
  m.model = field<std::string>(j, "model", m.model);
  if (j.contains("segments")) {
    const json& s = j["segments"];
    m.segments.clear();
    if (s.is_string()) {
      m.segments = s.get<std::string>();
    } else {
      for (const auto& v : s) {
        if (!m.segments.empty()) m.segments += ",";
        m.segments += std::to_string(v.get<std::size_t>());
      }
    }
  }
  m.n = field<std::size_t>(j, "n", m.n);
  m.gamma = field<double>(j, "gamma", m.gamma);
  m.c = field<double>(j, "c", m.c);
  m.grid = field<std::size_t>(j, "grid", m.grid);

  AmocOptions a = defaults.amoc;
  a.delta = field<double>(j, "delta", a.delta);
  a.permutations = field<std::size_t>(j, "permutations", a.permutations);
  a.alpha = field<double>(j, "alpha", a.alpha);
  a.p_value = field<std::string>(j, "p_value", a.p_value);
  if (j.contains("bandwidth")) {
    a.bandwidth = j["bandwidth"].is_number() ? format_double(j["bandwidth"].get<double>())
                                             : j["bandwidth"].get<std::string>();
  }

  BenchmarkOptions o = defaults;
  o.model = m;
  o.amoc = a;
  o.algorithm = field<std::string>(j, "algorithm", o.algorithm);
  o.k = field<std::size_t>(j, "K", o.k);
  o.k_lower = field<std::size_t>(j, "K_lower", o.k_lower);
  o.k_upper = field<std::size_t>(j, "K_upper", o.k_upper);

  BenchmarkCell cell;
  cell.model = o.model.spec(0);
  cell.algorithm = parse_algorithm(o.algorithm);
  cell.config = o.amoc.config();
  cell.config.workers = 1;
  const auto h = parse_bandwidth(o.amoc.bandwidth);
  if (h) cell.bandwidth = h->value();
  const std::size_t truth_k = cell.model.segment_lengths.size() - 1;
  cell.k = o.k == kUnset ? std::max<std::size_t>(truth_k, 1) : o.k;
  cell.k_lower = o.k_lower;
  cell.k_upper = o.k_upper == kUnset ? std::max<std::size_t>(truth_k, 1) + 1 : o.k_upper;
  if (cell.algorithm == Algorithm::semi_supervised && cell.k_lower > cell.k_upper) {
    throw ConfigError("K_l exceeds K_u");
  }
  return cell;
}

std::vector<BenchmarkCell> load_cells(const BenchmarkOptions& o) {
  if (o.cells.empty()) return {cell_from_json(json::object(), o)};
  std::ifstream in(o.cells);
  if (!in) throw ConfigError("cannot open cells file '" + o.cells + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(o.cells + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("cells")) doc = doc["cells"];
  if (!doc.is_array() || doc.empty()) {
    throw ConfigError(o.cells + ": expected a nonempty array of cells");
  }
  std::vector<BenchmarkCell> cells;
  for (const auto& j : doc) cells.push_back(cell_from_json(j, o));
  return cells;
}

int run_benchmark_cmd(const BenchmarkOptions& o, std::uint64_t seed, std::ostream& out) {
  check_format(o.format);
  std::vector<BenchmarkCell> cells;
  try {
    cells = load_cells(o);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad cell field: ") + e.what());
  }
  const BenchmarkReport report = run_benchmark(cells, o.replications, seed, o.amoc.workers);
  if (o.format == "json") {
    emit(o.output, out, to_json(report, o.timing).dump(2) + "\n");
    return kExitOk;
  }
  std::string text =
      "model,segments,c,algorithm,replications,k_correct,k_correct_se,detected,detected_se,"
      "match,match_se,superset,superset_se,subset,subset_se,mean_hausdorff";
  if (o.timing) text += ",mean_seconds,max_seconds";
  text += "\n";
  for (const auto& r : report.cells) {
    std::string segs;
    for (std::size_t len : r.cell.model.segment_lengths) {
      if (!segs.empty()) segs += ";";
      segs += std::to_string(len);
    }
    text += r.cell.model.model_id + "," + segs + "," + format_double(r.cell.model.c) + "," +
            to_string(r.cell.algorithm) + "," + std::to_string(r.replications);
    for (const Rate* rate : {&r.k_correct, &r.detected, &r.match, &r.superset, &r.subset}) {
      text += "," + format_double(rate->value) + "," + format_double(rate->standard_error);
    }
    text += "," + (r.mean_hausdorff ? format_double(*r.mean_hausdorff) : std::string());
    if (o.timing) text += "," + format_double(r.mean_seconds) + "," + format_double(r.max_seconds);
    text += "\n";
  }
  emit(o.output, out, text);
  return kExitOk;
}

void diagnose(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MMD-based multiple changepoint detection for functional data", "mmdseg"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");
  const auto config_help = "key=value file supplying any flag (flags given later win)";

  DetectOptions du, ds, dss, dfw;
  du.algorithm = Algorithm::unsupervised;
  ds.algorithm = Algorithm::supervised;
  dss.algorithm = Algorithm::semi_supervised;
  dfw.algorithm = Algorithm::forward;
  std::vector<std::pair<CLI::App*, DetectOptions*>> detects = {
      {add_detect(app, "detect-u", "unsupervised detection (DESC-U)", du), &du},
      {add_detect(app, "detect-s", "fixed number of changepoints (DESC-S)", ds), &ds},
      {add_detect(app, "detect-ss", "bounded number of changepoints (DESC-SS)", dss), &dss},
      {add_detect(app, "detect-forward", "DESC-S at K_l followed by DESC-U", dfw), &dfw},
  };

  SimulateOptions sim;
  CLI::App* simulate = app.add_subcommand("simulate", "draw a dataset from a simulation model");
  sim.model.add_to(*simulate, true);
  simulate->add_option("--seed", sim.seed, "random seed")->capture_default_str();
  simulate->add_option("--output,-o", sim.output, "CSV output file (default stdout)");
  simulate->add_option("--truth", sim.truth,
                       "truth JSON path (default: output with a .json extension)");

  OracleOptions orc;
  CLI::App* oracle = app.add_subcommand("oracle-curve", "closed-form vs empirical rho curve");
  oracle->add_option("--input,-i", orc.input, "CSV file with known segments");
  orc.model.add_to(*oracle, false);
  oracle->add_option("--seed", orc.seed, "random seed for --model")->capture_default_str();
  oracle->add_option("--bandwidth", orc.bandwidth, "'auto' or a positive value")
      ->capture_default_str();
  oracle->add_option("--output,-o", orc.output, "CSV output file (default stdout)");

  BenchmarkOptions bm;
  CLI::App* bench = app.add_subcommand("benchmark", "Monte Carlo evaluation over replications");
  bench->add_option("--cells", bm.cells, "JSON array of cells; flags supply defaults");
  bm.model.add_to(*bench, false);
  bench->add_option("--algorithm", bm.algorithm, "u, s, ss or forward")->capture_default_str();
  bm.amoc.add_to(*bench);
  bench->add_option("--K,-K", bm.k, "DESC-S budget (default: true count)");
  bench->add_option("--K-lower", bm.k_lower, "K_l for ss / forward")->capture_default_str();
  bench->add_option("--K-upper", bm.k_upper, "K_u for ss (default: true count + 1)");
  bench->add_option("--replications,-N", bm.replications, "replications per cell")
      ->capture_default_str();
  bench->add_option("--format", bm.format, "json or csv")->capture_default_str();
  bench->add_option("--output,-o", bm.output, "output file (default stdout)");
  bench->add_flag("--timing", bm.timing, "include per-replication timing");

  // Consumed by expand_config; registered so it shows up in --help.
  std::string config_path;
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--config", config_path, config_help);
  }

  try {
    std::vector<std::string> expanded = expand_config(args);
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      // Subcommand help arrives as a parse error with exit code 0.
      if (e.get_exit_code() == 0) {
        for (CLI::App* sub : app.get_subcommands()) {
          out << sub->help();
          return kExitOk;
        }
        out << app.help();
        return kExitOk;
      }
      diagnose(err, "config", e.what());
      return kExitConfig;
    }

    for (auto& [sub, opts] : detects) {
      if (sub->parsed()) return run_detect(*opts, out, err);
    }
    if (simulate->parsed()) return run_simulate(sim, out);
    if (oracle->parsed()) return run_oracle(orc, out);
    if (bench->parsed()) {
      return run_benchmark_cmd(bm, bm.amoc.seed, out);
    }
    diagnose(err, "config", "no subcommand given");
    return kExitConfig;
  } catch (const ConfigError& e) {
    diagnose(err, "config", e.what());
    return kExitConfig;
  } catch (const BoundsError& e) {
    diagnose(err, "config", e.what());
    return kExitConfig;
  } catch (const DataError& e) {
    diagnose(err, "data", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    diagnose(err, "data", e.what());
    return kExitData;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mmdseg::cli
