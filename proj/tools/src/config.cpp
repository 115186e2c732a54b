#include "cfor/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "cfor/cases.hpp"
#include "cfor/csv.hpp"

namespace cfor::app {

namespace pt = boost::property_tree;

const char* to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::vortex: return "vortex";
    case CaseKind::shock_entropy: return "shock_entropy";
    case CaseKind::kernel_report: return "kernel_report";
  }
  return "?";
}

namespace {

const char* to_string(MeasureScaling s) {
  switch (s) {
    case MeasureScaling::absolute: return "absolute";
    case MeasureScaling::per_line: return "per_line";
    case MeasureScaling::domain: return "domain";
  }
  return "?";
}

const char* to_string(FilterVariables v) {
  return v == FilterVariables::conserved ? "conserved" : "primitive";
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError(key + ": " + what);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    fail(key, "expected a number, got '" + text + "'");
  return v;
}

std::size_t parse_size(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::size_t v = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
    fail(key, "expected a nonnegative integer, got '" + text + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::vector<std::string> items;
  for (std::string item; in >> item;) items.push_back(item);
  return items;
}

CaseKind parse_case(const std::string& text) {
  const std::string t = trim(text);
  if (t == "vortex") return CaseKind::vortex;
  if (t == "shock_entropy") return CaseKind::shock_entropy;
  if (t == "kernel_report") return CaseKind::kernel_report;
  fail("case", "unknown case '" + text + "' (vortex, shock_entropy, kernel_report)");
}

MeasureScaling parse_scaling(const std::string& text) {
  const std::string t = trim(text);
  if (t == "absolute") return MeasureScaling::absolute;
  if (t == "per_line") return MeasureScaling::per_line;
  if (t == "domain") return MeasureScaling::domain;
  fail("scheme.sensor_scaling", "expected absolute, per_line or domain, got '" + text + "'");
}

FilterVariables parse_variables(const std::string& text) {
  const std::string t = trim(text);
  if (t == "conserved") return FilterVariables::conserved;
  if (t == "primitive") return FilterVariables::primitive;
  fail("scheme.filter_variables", "expected conserved or primitive, got '" + text + "'");
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + csv::num(v[k]);
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

void apply_scheme(RunConfig& cfg, const pt::ptree& section) {
  for (const auto& [key, node] : section) {
    const std::string full = "scheme." + key;
    const std::string value = node.data();
    if (key == "half_width") {
      cfg.half_width = static_cast<int>(parse_size(full, value));
    } else if (key == "r_highpass") {
      cfg.r_highpass = parse_double(full, value);
    } else if (key == "r_pred") {
      cfg.r_pred = parse_double(full, value);
    } else if (key == "r_rest") {
      cfg.r_rest = parse_double(full, value);
    } else if (key == "cfl") {
      cfg.cfl = parse_double(full, value);
    } else if (key == "zeta") {
      cfg.zeta = trim(value) == "off" ? CforConfig::filter_off : parse_double(full, value);
    } else if (key == "sensor_scaling") {
      cfg.measure_scaling = parse_scaling(value);
    } else if (key == "filter_variables") {
      cfg.filter_variables = parse_variables(value);
    } else {
      fail(full, "unknown key");
    }
  }
}

void apply_case(RunConfig& cfg, const std::string& name, const pt::ptree& section) {
  static const std::map<CaseKind, std::set<std::string>> allowed = {
      {CaseKind::vortex, {"n", "t_final", "output_times", "lambda"}},
      {CaseKind::shock_entropy, {"n", "t_final", "output_times", "kappa", "epsilon", "resample"}},
      {CaseKind::kernel_report, {"samples"}},
  };
  for (const auto& [key, node] : section) {
    const std::string full = name + "." + key;
    const std::string value = node.data();
    if (!allowed.at(cfg.kind).count(key)) fail(full, "unknown key");
    if (key == "n") {
      cfg.n.clear();
      for (const auto& item : split_list(value)) cfg.n.push_back(parse_size(full, item));
      if (cfg.n.empty()) fail(full, "needs at least one grid size");
    } else if (key == "t_final") {
      cfg.t_final = parse_double(full, value);
    } else if (key == "output_times") {
      cfg.output_times.clear();
      for (const auto& item : split_list(value)) cfg.output_times.push_back(parse_double(full, item));
    } else if (key == "lambda") {
      cfg.lambda = parse_double(full, value);
    } else if (key == "kappa") {
      cfg.kappa = parse_double(full, value);
    } else if (key == "epsilon") {
      cfg.epsilon = parse_double(full, value);
    } else if (key == "resample") {
      cfg.resample = parse_size(full, value);
    } else if (key == "samples") {
      cfg.spectrum_samples = parse_size(full, value);
    }
  }
}

void check(bool ok, const std::string& key, const std::string& what) {
  if (!ok) fail(key, what);
}

}  // namespace

CforConfig RunConfig::scheme() const {
  CforConfig c;
  c.kernel_hp = {1.0, r_highpass, half_width, 1};
  c.kernel_pred = {1.0, r_pred, half_width, 0};
  c.kernel_rest = {1.0, r_rest, half_width, 0};
  c.cfl = cfl;
  c.zeta = zeta;
  c.measure_scaling = measure_scaling;
  c.filter_variables = filter_variables;
  return c;
}

RunConfig defaults_for(CaseKind kind) {
  RunConfig cfg;
  cfg.kind = kind;
  cfg.output_dir = std::string("out/") + to_string(kind);
  switch (kind) {
    case CaseKind::vortex:
      cfg.n = {20, 40};
      cfg.t_final = 2.0;
      cfg.r_rest = 3.2;
      cfg.measure_scaling = MeasureScaling::per_line;
      break;
    case CaseKind::shock_entropy:
      cfg.n = {800};
      cfg.t_final = 3.5 / 3.549648;
      cfg.r_rest = 2.0;
      cfg.filter_variables = FilterVariables::primitive;
      break;
    case CaseKind::kernel_report:
      break;
  }
  return cfg;
}

void validate(const RunConfig& cfg) {
  check(cfg.half_width >= 4 && cfg.half_width <= 128, "scheme.half_width", "must lie in [4, 128]");
  for (auto [key, r] : {std::pair{"scheme.r_highpass", cfg.r_highpass},
                        std::pair{"scheme.r_pred", cfg.r_pred},
                        std::pair{"scheme.r_rest", cfg.r_rest}})
    check(r >= 0.5 && r <= 20.0, key, "must lie in [0.5, 20]");
  check(cfg.cfl > 0.0 && cfg.cfl <= 2.0, "scheme.cfl", "must lie in (0, 2]");
  check(cfg.zeta == CforConfig::filter_off ||
            (cfg.zeta >= CforConfig::zeta_min && cfg.zeta <= CforConfig::zeta_max),
        "scheme.zeta", "must be 'off' or lie in [0.0005, 0.01]");

  const std::string sec = to_string(cfg.kind);
  if (cfg.kind == CaseKind::kernel_report) {
    check(cfg.spectrum_samples >= 2 && cfg.spectrum_samples <= 100001, sec + ".samples",
          "must lie in [2, 100001]");
    return;
  }

  check(!cfg.n.empty(), sec + ".n", "needs at least one grid size");
  check(std::is_sorted(cfg.n.begin(), cfg.n.end()) &&
            std::adjacent_find(cfg.n.begin(), cfg.n.end()) == cfg.n.end(),
        sec + ".n", "grid sizes must be strictly increasing");
  check(cfg.t_final > 0.0, sec + ".t_final", "must be positive");
  check(std::is_sorted(cfg.output_times.begin(), cfg.output_times.end()), sec + ".output_times",
        "must be increasing");
  for (double t : cfg.output_times)
    check(t > 0.0 && t <= cfg.t_final, sec + ".output_times", "must lie in (0, t_final]");

  const euler::GasModel gas;
  if (cfg.kind == CaseKind::vortex) {
    for (auto n : cfg.n) check(n >= 8 && n <= 1024, sec + ".n", "must lie in [8, 1024]");
    check(cfg.t_final <= 100.0, sec + ".t_final", "must not exceed 100");
    cases::VortexSpec spec;
    spec.lambda = cfg.lambda;
    check(cfg.lambda > 0.0, sec + ".lambda", "must be positive");
    try {
      spec.validate(gas);
    } catch (const std::invalid_argument& e) {
      fail(sec + ".lambda", e.what());
    }
  } else {
    check(cfg.n.size() == 1, sec + ".n", "takes a single grid size");
    check(cfg.n.front() >= 64 && cfg.n.front() <= 20000, sec + ".n", "must lie in [64, 20000]");
    check(cfg.kappa > 0.0 && cfg.kappa <= 200.0, sec + ".kappa", "must lie in (0, 200]");
    check(cfg.epsilon >= 0.0 && cfg.epsilon <= 0.2, sec + ".epsilon", "must lie in [0, 0.2]");
    cases::ShockEntropySpec spec;
    const double reach = spec.interface + cases::shock_speed(spec, gas) * cfg.t_final;
    check(reach < spec.x_end, sec + ".t_final",
          "shock would leave the domain (reaches x=" + csv::num(reach) + ")");
    if (cfg.resample)
      check(*cfg.resample >= cfg.n.front() && *cfg.resample <= 16 * cfg.n.front(),
            sec + ".resample", "must lie in [n, 16 n]");
  }
}

RunConfig parse_config(std::istream& in) {
  std::ostringstream raw;
  raw << in.rdbuf();
  const std::string text = raw.str();
  pt::ptree tree;
  try {
    std::istringstream body(text);
    pt::read_ini(body, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  const auto case_text = tree.get_optional<std::string>("case");
  if (!case_text) throw ConfigError("case: missing (vortex, shock_entropy, kernel_report)");
  RunConfig cfg = defaults_for(parse_case(*case_text));

  // the ini reader drops sections without keys, so headers are checked here
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line = trim(line);
    if (line.size() < 2 || line.front() != '[' || line.back() != ']') continue;
    const std::string name = trim(line.substr(1, line.size() - 2));
    if (name == "scheme" || name == to_string(cfg.kind)) continue;
    if (name == "vortex" || name == "shock_entropy" || name == "kernel_report")
      fail(name, std::string("section does not match case '") + to_string(cfg.kind) + "'");
    fail(name, "unknown section");
  }

  for (const auto& [key, node] : tree) {
    // an empty section and a top-level key look alike in the tree
    if (key == "case") continue;
    if (key == "output_dir") {
      cfg.output_dir = trim(node.data());
      continue;
    }
    if (key == "scheme") {
      apply_scheme(cfg, node);
    } else if (key == to_string(cfg.kind)) {
      apply_case(cfg, key, node);
    } else if (key == "vortex" || key == "shock_entropy" || key == "kernel_report") {
      fail(key, std::string("section does not match case '") + to_string(cfg.kind) + "'");
    } else {
      fail(key, node.empty() ? "unknown key" : "unknown section");
    }
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

void write_config(std::ostream& os, const RunConfig& cfg) {
  os << "case = " << to_string(cfg.kind) << '\n';
  os << "output_dir = " << cfg.output_dir << '\n';
  os << "\n[scheme]\n";
  os << "half_width = " << cfg.half_width << '\n';
  os << "r_highpass = " << csv::num(cfg.r_highpass) << '\n';
  os << "r_pred = " << csv::num(cfg.r_pred) << '\n';
  os << "r_rest = " << csv::num(cfg.r_rest) << '\n';
  os << "cfl = " << csv::num(cfg.cfl) << '\n';
  os << "zeta = " << (cfg.zeta == CforConfig::filter_off ? "off" : csv::num(cfg.zeta)) << '\n';
  os << "sensor_scaling = " << to_string(cfg.measure_scaling) << '\n';
  os << "filter_variables = " << to_string(cfg.filter_variables) << '\n';
  os << '\n' << '[' << to_string(cfg.kind) << "]\n";
  switch (cfg.kind) {
    case CaseKind::vortex:
      os << "n = " << join(cfg.n) << '\n';
      os << "t_final = " << csv::num(cfg.t_final) << '\n';
      os << "output_times = " << join(cfg.output_times) << '\n';
      os << "lambda = " << csv::num(cfg.lambda) << '\n';
      break;
    case CaseKind::shock_entropy:
      os << "n = " << join(cfg.n) << '\n';
      os << "t_final = " << csv::num(cfg.t_final) << '\n';
      os << "output_times = " << join(cfg.output_times) << '\n';
      os << "kappa = " << csv::num(cfg.kappa) << '\n';
      os << "epsilon = " << csv::num(cfg.epsilon) << '\n';
      if (cfg.resample) os << "resample = " << *cfg.resample << '\n';
      break;
    case CaseKind::kernel_report:
      os << "samples = " << cfg.spectrum_samples << '\n';
      break;
  }
}

}  // namespace cfor::app
