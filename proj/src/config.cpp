#include "leodop/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "leodop/errors.hpp"

namespace leodop {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << line << ": " << msg;
  throw ConfigError(os.str());
}

enum class Unit { kNone, kAngle, kLength, kFrequency, kTime };

double parse_number(const std::string& raw, Unit unit, int line) {
  const std::string v = trim(raw);
  std::size_t split = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const char c = v[i];
    if (std::isalpha(static_cast<unsigned char>(c)) && c != 'e' && c != 'E') {
      split = i;
      break;
    }
    // 'e' only counts as part of the number when followed by digits/sign
    if ((c == 'e' || c == 'E') &&
        (i + 1 >= v.size() ||
         (!std::isdigit(static_cast<unsigned char>(v[i + 1])) &&
          v[i + 1] != '+' && v[i + 1] != '-'))) {
      split = i;
      break;
    }
  }
  const std::string num = trim(v.substr(0, split));
  const std::string suffix = trim(v.substr(split));
  double value = 0.0;
  const auto res =
      std::from_chars(num.data(), num.data() + num.size(), value);
  if (res.ec != std::errc() || res.ptr != num.data() + num.size())
    fail(line, "cannot parse number '" + v + "'");

  if (suffix.empty()) return value;
  switch (unit) {
    case Unit::kAngle:
      if (suffix == "rad") return value;
      if (suffix == "deg") return value * std::numbers::pi / 180.0;
      break;
    case Unit::kLength:
      if (suffix == "m") return value;
      if (suffix == "km") return value * 1e3;
      break;
    case Unit::kFrequency:
      if (suffix == "hz") return value;
      if (suffix == "khz") return value * 1e3;
      if (suffix == "mhz") return value * 1e6;
      if (suffix == "ghz") return value * 1e9;
      break;
    case Unit::kTime:
      if (suffix == "s") return value;
      break;
    case Unit::kNone:
      break;
  }
  fail(line, "unexpected unit suffix '" + suffix + "' in '" + v + "'");
}

std::vector<double> parse_list(const std::string& raw, Unit unit, int line) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) fail(line, "empty list element");
    out.push_back(parse_number(item, unit, line));
  }
  if (out.empty()) fail(line, "empty list");
  return out;
}

long long parse_int(const std::string& raw, int line) {
  const std::string v = trim(raw);
  long long value = 0;
  const auto res =
      std::from_chars(v.data(), v.data() + v.size(), value);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    fail(line, "cannot parse integer '" + v + "'");
  return value;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw_line;
  std::string section;
  int line_no = 0;

  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "constants" && section != "cell" &&
          section != "constellation" && section != "sim" &&
          section != "numerics" && section != "doppler_cdf" &&
          section != "diff_cdf" && section != "max_diff" &&
          section != "plan" && section != "output" && section != "validate")
        fail(line_no, "unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail(line_no, "empty key or value");

    auto unknown = [&]() {
      fail(line_no, "unknown key '" + key + "' in section [" + section + "]");
    };

    if (section == "constants") {
      if (key == "earth_radius")
        cfg.earth_radius = parse_number(value, Unit::kLength, line_no);
      else if (key == "altitude")
        cfg.altitude = parse_number(value, Unit::kLength, line_no);
      else if (key == "carrier_frequency")
        cfg.carrier_frequency = parse_number(value, Unit::kFrequency, line_no);
      else if (key == "light_speed")
        cfg.light_speed = parse_number(value, Unit::kNone, line_no);
      else if (key == "grav_parameter")
        cfg.grav_parameter = parse_number(value, Unit::kNone, line_no);
      else if (key == "earth_rotation_rate")
        cfg.earth_rotation_rate = parse_number(value, Unit::kNone, line_no);
      else if (key == "inclination")
        cfg.inclination = parse_number(value, Unit::kAngle, line_no);
      else
        unknown();
    } else if (section == "cell") {
      if (key == "theta_c")
        cfg.cell_theta_c = parse_number(value, Unit::kAngle, line_no);
      else if (key == "mu_ups_min")
        cfg.cell_mu_ups_min = parse_number(value, Unit::kAngle, line_no);
      else if (key == "theta_v")
        cfg.cell_theta_v = parse_number(value, Unit::kAngle, line_no);
      else if (key == "center_lat") {
        cfg.cell_lat = parse_number(value, Unit::kAngle, line_no);
        cfg.cell_explicit = true;
      } else if (key == "center_lon") {
        cfg.cell_lon = parse_number(value, Unit::kAngle, line_no);
        cfg.cell_explicit = true;
      } else
        unknown();
    } else if (section == "constellation") {
      if (key == "planes")
        cfg.planes = static_cast<int>(parse_int(value, line_no));
      else if (key == "sats_per_plane")
        cfg.sats_per_plane = static_cast<int>(parse_int(value, line_no));
      else if (key == "phase_offset")
        cfg.phase_offset = parse_number(value, Unit::kAngle, line_no);
      else
        unknown();
    } else if (section == "sim") {
      if (key == "samples")
        cfg.samples = static_cast<int>(parse_int(value, line_no));
      else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(parse_int(value, line_no));
      else if (key == "anchor_time")
        cfg.anchor_time = parse_number(value, Unit::kTime, line_no);
      else if (key == "threads")
        cfg.threads = static_cast<int>(parse_int(value, line_no));
      else
        unknown();
    } else if (section == "numerics") {
      if (key == "v_eval") {
        if (value == "quadrature") cfg.v_eval = VMethod::kQuadrature;
        else if (value == "series") cfg.v_eval = VMethod::kSeries;
        else fail(line_no, "v_eval must be quadrature or series");
      } else if (key == "series_n_max")
        cfg.series_n_max = static_cast<int>(parse_int(value, line_no));
      else if (key == "quad_tol")
        cfg.cdf_abs_tol = parse_number(value, Unit::kNone, line_no);
      else if (key == "gl_nodes")
        cfg.gl_nodes = static_cast<int>(parse_int(value, line_no));
      else if (key == "rounding") {
        if (value == "floor") cfg.rounding = RoundingMode::kFloor;
        else if (value == "ceil") cfg.rounding = RoundingMode::kCeil;
        else if (value == "nearest") cfg.rounding = RoundingMode::kNearest;
        else fail(line_no, "rounding must be floor, ceil or nearest");
      } else
        unknown();
    } else if (section == "doppler_cdf") {
      if (key == "theta_v")
        cfg.dc_theta_v = parse_list(value, Unit::kAngle, line_no);
      else if (key == "altitudes")
        cfg.dc_altitudes = parse_list(value, Unit::kLength, line_no);
      else if (key == "s_points")
        cfg.dc_s_points = static_cast<int>(parse_int(value, line_no));
      else
        unknown();
    } else if (section == "diff_cdf") {
      if (key == "theta_c_list")
        cfg.diff_theta_c = parse_list(value, Unit::kAngle, line_no);
      else if (key == "theta_v")
        cfg.diff_theta_v = parse_number(value, Unit::kAngle, line_no);
      else if (key == "theta_v_sweep")
        cfg.diff_theta_v_sweep = parse_list(value, Unit::kAngle, line_no);
      else if (key == "mu_ups_min")
        cfg.diff_mu_ups_min = parse_number(value, Unit::kAngle, line_no);
      else if (key == "altitude")
        cfg.diff_altitude = parse_number(value, Unit::kLength, line_no);
      else if (key == "zeta_points")
        cfg.diff_zeta_points = static_cast<int>(parse_int(value, line_no));
      else
        unknown();
    } else if (section == "max_diff") {
      if (key == "parent_theta_c")
        cfg.md_parent_theta_c = parse_number(value, Unit::kAngle, line_no);
      else if (key == "threshold")
        cfg.md_threshold = parse_number(value, Unit::kFrequency, line_no);
      else if (key == "theta_v_points")
        cfg.md_points = static_cast<int>(parse_int(value, line_no));
      else
        unknown();
    } else if (section == "plan") {
      if (key == "parent_theta_c")
        cfg.plan_parent_theta_c = parse_number(value, Unit::kAngle, line_no);
      else if (key == "threshold")
        cfg.plan_threshold = parse_number(value, Unit::kFrequency, line_no);
      else
        unknown();
    } else if (section == "output") {
      if (key == "dir") cfg.output_dir = value;
      else unknown();
    } else if (section == "validate") {
      if (key == "ks_budget")
        cfg.val_ks_budget = parse_number(value, Unit::kNone, line_no);
      else if (key == "cap_cdf_budget")
        cfg.val_cap_cdf_budget = parse_number(value, Unit::kNone, line_no);
      else if (key == "ups_min_budget")
        cfg.val_ups_min_budget = parse_number(value, Unit::kNone, line_no);
      else if (key == "series_budget")
        cfg.val_series_budget = parse_number(value, Unit::kNone, line_no);
      else if (key == "exact_vs_approx_budget")
        cfg.val_exact_vs_approx_budget =
            parse_number(value, Unit::kNone, line_no);
      else if (key == "bound_slack")
        cfg.val_bound_slack = parse_number(value, Unit::kNone, line_no);
      else
        unknown();
    } else {
      fail(line_no, "key outside any section");
    }
  }

  if (cfg.samples < 1) throw ConfigError("sim.samples must be >= 1");
  if (cfg.planes < 1 || cfg.sats_per_plane < 1)
    throw ConfigError("constellation counts must be >= 1");
  if (cfg.gl_nodes < 2) throw ConfigError("numerics.gl_nodes must be >= 2");
  if (cfg.series_n_max < 0)
    throw ConfigError("numerics.series_n_max must be >= 0");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace leodop
