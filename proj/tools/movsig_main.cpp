// movsig command-line front end: closed-form frequency planning, coverage
// reports, radiation patterns, pilot-sweep runs and the table-producing
// experiments, with CSV/JSON output carrying the resolved configuration.

#include <cmath>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "movsig/channel.hpp"
#include "movsig/experiments.hpp"
#include "movsig/freqplan.hpp"
#include "movsig/protocol.hpp"
#include "movsig/reconfig.hpp"
#include "movsig/result_table.hpp"
#include "movsig/units.hpp"
#include "movsig/version.hpp"

namespace {

using movsig::deg2rad;
using movsig::rad2deg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string tool_string() {
  return std::string(movsig::kToolName) + " " + movsig::kToolVersion;
}

std::string utc_now_rfc3339() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// Options shared by every subcommand. Flag values override config-file
// values, which override built-in defaults.
struct CommonOptions {
  std::string config_path;
  std::string output_path;
  std::string format;
  bool reproducible = false;
  std::uint64_t seed = 0;
  int threads = 1;

  json config = json::object();

  void add_to(CLI::App* cmd, const std::string& default_format) {
    format = default_format;
    cmd->add_option("--config", config_path, "JSON config file (flags take precedence)");
    cmd->add_option("-o,--output", output_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "output format");
    cmd->add_flag("--reproducible", reproducible,
                  "omit timestamps so identical runs are byte-identical");
    cmd->add_option("--seed", seed, "random seed for Monte-Carlo experiments");
    cmd->add_option("--threads", threads, "worker threads (output is identical for any count)");
  }

  void load_config(CLI::App* cmd) {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw IoError("cannot open config file: " + config_path);
    try {
      in >> config;
    } catch (const json::exception& e) {
      throw std::invalid_argument("config file is not valid JSON: " + std::string(e.what()));
    }
    merge(cmd, "--output", "output", output_path);
    merge(cmd, "--format", "format", format);
    merge(cmd, "--seed", "seed", seed);
    merge(cmd, "--threads", "threads", threads);
    if (cmd->count("--reproducible") == 0 && config.contains("reproducible")) {
      reproducible = config.at("reproducible").get<bool>();
    }
  }

  template <typename T>
  void merge(CLI::App* cmd, const char* flag, const char* key, T& value) const {
    if (cmd->count(flag) == 0 && config.contains(key)) {
      value = config.at(key).get<T>();
    }
  }
};

std::ostream& open_output(const CommonOptions& common, std::ofstream& file) {
  if (common.output_path.empty()) return std::cout;
  file.open(common.output_path, std::ios::binary);
  if (!file) throw IoError("cannot open output file: " + common.output_path);
  return file;
}

void emit_table(movsig::ResultTable table, const CommonOptions& common) {
  if (!common.reproducible) table.timestamp = utc_now_rfc3339();
  if (common.format != "csv" && common.format != "json")
    throw std::invalid_argument("format must be csv or json");
  std::ofstream file;
  std::ostream& out = open_output(common, file);
  if (common.format == "csv") {
    table.write_csv(out);
  } else {
    table.write_json(out);
  }
  out.flush();
  if (!out) throw IoError("write failed: " + common.output_path);
}

void emit_text(const std::string& text, const json& doc, const CommonOptions& common) {
  if (common.format != "text" && common.format != "json")
    throw std::invalid_argument("format must be text or json");
  std::ofstream file;
  std::ostream& out = open_output(common, file);
  if (common.format == "text") {
    out << text;
  } else {
    out << doc.dump(2) << "\n";
  }
  out.flush();
  if (!out) throw IoError("write failed: " + common.output_path);
}

void check_mode(const std::string& mode) {
  if (mode != "los" && mode != "nlos")
    throw std::invalid_argument("mode must be los or nlos");
}

std::vector<movsig::Baseline> parse_baselines(const std::string& csv) {
  std::vector<movsig::Baseline> out;
  std::istringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) out.push_back(movsig::baseline_from_name(token));
  }
  return out;
}

// d_A pinned so the lowest optimal frequency equals f_min (mirror-symmetric
// in the transmitter angle for the cascaded link).
double pinned_spacing(const std::string& mode, double f_min_hz, double tx_angle_rad) {
  if (mode == "los") return movsig::kSpeedOfLight / f_min_hz;
  return movsig::kSpeedOfLight / (f_min_hz * (1.0 + std::abs(std::sin(tx_angle_rad))));
}

std::string format_deg(double rad) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", rad2deg(rad));
  return buffer;
}

// ---------------------------------------------------------------- freq-opt

struct FreqOptCmd {
  CommonOptions common;
  std::string mode = "los";
  double theta_deg = 0.0;
  double theta_r_deg = 0.0;
  double theta_t_deg = 0.0;
  double fa_hz = 0.0;
  double spacing_m = 0.0;
  double f_min_hz = 0.0;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app) {
    cmd = app.add_subcommand("freq-opt", "closed-form optimal carrier frequency");
    cmd->add_option("--mode", mode, "los or nlos (required, flag or config)");
    cmd->add_option("--theta", theta_deg, "receiver angle, degrees (los)");
    cmd->add_option("--theta-r", theta_r_deg, "receiver angle, degrees (nlos)");
    cmd->add_option("--theta-t", theta_t_deg, "transmitter angle, degrees (nlos)");
    cmd->add_option("--fa", fa_hz, "array frequency c/dA, Hz");
    cmd->add_option("--d-a", spacing_m, "element spacing, meters (alternative to --fa)");
    cmd->add_option("--f-min", f_min_hz, "resolve the degenerate case to this frequency");
    common.add_to(cmd, "text");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--mode", "mode", mode);
    common.merge(cmd, "--theta", "theta_deg", theta_deg);
    common.merge(cmd, "--theta-r", "theta_r_deg", theta_r_deg);
    common.merge(cmd, "--theta-t", "theta_t_deg", theta_t_deg);
    common.merge(cmd, "--fa", "fa_hz", fa_hz);
    common.merge(cmd, "--d-a", "d_a_m", spacing_m);
    common.merge(cmd, "--f-min", "f_min_hz", f_min_hz);
    check_mode(mode);
    if (fa_hz <= 0.0 && spacing_m > 0.0) fa_hz = movsig::kSpeedOfLight / spacing_m;
    if (fa_hz <= 0.0) throw std::invalid_argument("--fa or --d-a is required");

    movsig::OptimalFrequency opt;
    json doc{{"mode", mode}, {"fa_hz", fa_hz}};
    if (mode == "los") {
      opt = movsig::optimal_frequency_los(deg2rad(theta_deg), fa_hz);
      doc["theta_deg"] = theta_deg;
    } else {
      opt = movsig::optimal_frequency_nlos(deg2rad(theta_r_deg), deg2rad(theta_t_deg), fa_hz);
      doc["theta_r_deg"] = theta_r_deg;
      doc["theta_t_deg"] = theta_t_deg;
    }

    std::ostringstream text;
    doc["any"] = opt.any();
    if (opt.any()) {
      text << "f_star = any (every frequency attains the bound; resolved to f_min)\n";
      doc["f_star_hz"] = nullptr;
      if (f_min_hz > 0.0) {
        text << "resolved_hz = " << movsig::format_double(opt.resolve(f_min_hz)) << "\n";
        doc["resolved_hz"] = opt.resolve(f_min_hz);
      }
    } else {
      text << "f_star_hz = " << movsig::format_double(*opt.f_star_hz) << "\n";
      doc["f_star_hz"] = *opt.f_star_hz;
    }
    emit_text(text.str(), doc, common);
    return kExitOk;
  }
};

// ---------------------------------------------------------------- coverage

struct CoverageCmd {
  CommonOptions common;
  std::string mode = "los";
  double width_ratio = 0.0;
  double theta_t_deg = 0.0;
  bool check = false;
  double resolution_mrad = 1.0;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app) {
    cmd = app.add_subcommand("coverage", "angular coverage of the frequency range");
    cmd->add_option("--mode", mode, "los or nlos (required, flag or config)");
    cmd->add_option("--W", width_ratio, "frequency range width f_max/f_min (required, flag or config)");
    cmd->add_option("--theta-t", theta_t_deg, "transmitter angle, degrees (nlos)");
    cmd->add_flag("--check", check, "verify the closed form with a numeric sweep");
    cmd->add_option("--resolution-mrad", resolution_mrad, "sweep resolution for --check");
    common.add_to(cmd, "text");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--mode", "mode", mode);
    common.merge(cmd, "--W", "W", width_ratio);
    common.merge(cmd, "--theta-t", "theta_t_deg", theta_t_deg);
    common.merge(cmd, "--resolution-mrad", "resolution_mrad", resolution_mrad);
    check_mode(mode);
    if (width_ratio <= 0.0) throw std::invalid_argument("--W is required");

    const movsig::CoverageReport report =
        mode == "los" ? movsig::coverage_los(width_ratio)
                      : movsig::coverage_nlos(width_ratio, deg2rad(theta_t_deg));

    std::ostringstream text;
    json doc{{"mode", mode}, {"W", width_ratio}};
    text << "mode = " << mode << "\n";
    text << "W = " << width_ratio << "\n";
    if (mode == "nlos") {
      text << "theta_t_deg = " << format_deg(deg2rad(theta_t_deg)) << "\n";
      doc["theta_t_deg"] = theta_t_deg;
    }
    if (report.theta_plus_rad) {
      text << "theta_plus_deg = " << format_deg(*report.theta_plus_rad) << "\n";
      doc["theta_plus_deg"] = rad2deg(*report.theta_plus_rad);
    }
    if (report.theta_r_minus_rad) {
      text << "theta_r_minus_deg = " << format_deg(*report.theta_r_minus_rad) << "\n";
      doc["theta_r_minus_deg"] = rad2deg(*report.theta_r_minus_rad);
    }
    if (report.theta_r_plus_rad) {
      text << "theta_r_plus_deg = " << format_deg(*report.theta_r_plus_rad) << "\n";
      doc["theta_r_plus_deg"] = rad2deg(*report.theta_r_plus_rad);
    }
    text << "coverage_deg = " << format_deg(report.coverage_rad) << "\n";
    doc["coverage_deg"] = rad2deg(report.coverage_rad);

    text << "covered =";
    json intervals = json::array();
    for (std::size_t i = 0; i < report.covered.size(); ++i) {
      text << (i == 0 ? " " : " u ") << "[" << format_deg(report.covered[i].lo_rad)
           << ", " << format_deg(report.covered[i].hi_rad) << "]";
      intervals.push_back({rad2deg(report.covered[i].lo_rad),
                           rad2deg(report.covered[i].hi_rad)});
    }
    text << "\n";
    doc["covered_deg"] = intervals;

    if (check) {
      const bool ok = movsig::coverage_numeric_check(report, resolution_mrad * 1e-3);
      text << "check = " << (ok ? "pass" : "fail") << "\n";
      doc["check"] = ok ? "pass" : "fail";
      if (!ok) {
        emit_text(text.str(), doc, common);
        return kExitUsage;
      }
    }
    emit_text(text.str(), doc, common);
    return kExitOk;
  }
};

// ----------------------------------------------------------------- pattern

struct PatternCmd {
  CommonOptions common;
  std::string mode = "los";
  int n_elements = 16;
  double f_min_hz = 8e9;
  double width_ratio = 1.8;
  int freq_count = 9;
  double theta_t_deg = 0.0;
  double step_deg = 0.25;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app) {
    cmd = app.add_subcommand("pattern", "radiation pattern table over frequencies");
    cmd->add_option("--mode", mode, "los or nlos (required, flag or config)");
    cmd->add_option("--N", n_elements, "number of elements");
    cmd->add_option("--f-min", f_min_hz, "bottom of the frequency range, Hz");
    cmd->add_option("--W", width_ratio, "frequency range width");
    cmd->add_option("--freqs", freq_count, "number of frequencies across the range");
    cmd->add_option("--theta-t", theta_t_deg, "transmitter angle, degrees (nlos)");
    cmd->add_option("--step-deg", step_deg, "angle grid step, degrees");
    common.add_to(cmd, "csv");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--mode", "mode", mode);
    common.merge(cmd, "--N", "N", n_elements);
    common.merge(cmd, "--f-min", "f_min_hz", f_min_hz);
    common.merge(cmd, "--W", "W", width_ratio);
    common.merge(cmd, "--freqs", "freqs", freq_count);
    common.merge(cmd, "--theta-t", "theta_t_deg", theta_t_deg);
    common.merge(cmd, "--step-deg", "step_deg", step_deg);
    check_mode(mode);
    if (freq_count < 1) throw std::invalid_argument("--freqs must be at least 1");
    if (!(step_deg > 0.0)) throw std::invalid_argument("--step-deg must be positive");
    if (!(f_min_hz > 0.0)) throw std::invalid_argument("--f-min must be positive");
    if (!(width_ratio >= 1.0)) throw std::invalid_argument("invalid range width");

    const double tx_angle = deg2rad(theta_t_deg);
    const movsig::UlaGeometry geom(n_elements, pinned_spacing(mode, f_min_hz, tx_angle));

    std::vector<double> frequencies(static_cast<std::size_t>(freq_count));
    const double f_max_hz = f_min_hz * width_ratio;
    for (int k = 0; k < freq_count; ++k) {
      frequencies[static_cast<std::size_t>(k)] =
          freq_count == 1 ? f_min_hz
                          : f_min_hz + (f_max_hz - f_min_hz) * k / (freq_count - 1);
    }

    std::vector<double> angles;
    const int count = std::max(2, static_cast<int>(std::lround(180.0 / step_deg)) + 1);
    for (int i = 0; i < count; ++i) {
      angles.push_back(deg2rad(-90.0 + 180.0 * i / (count - 1)));
    }

    movsig::ResultTable table;
    table.columns.push_back("angle_deg");
    std::vector<std::vector<double>> patterns;
    for (int k = 0; k < freq_count; ++k) {
      table.columns.push_back("pattern_f" + std::to_string(k + 1));
      const movsig::Wavelength wl =
          movsig::Wavelength::from_frequency_hz(frequencies[static_cast<std::size_t>(k)]);
      patterns.push_back(
          mode == "los"
              ? movsig::radiation_pattern_los(angles, movsig::uniform_precoder(n_elements),
                                              geom, wl)
              : movsig::radiation_pattern_nlos(angles, tx_angle, geom, wl));
    }
    for (std::size_t i = 0; i < angles.size(); ++i) {
      std::vector<double> row{rad2deg(angles[i])};
      for (const auto& pattern : patterns) row.push_back(pattern[i]);
      table.rows.push_back(std::move(row));
    }

    table.tool = tool_string();
    json cfg{{"command", "pattern"},          {"mode", mode},
             {"n_elements", n_elements},      {"f_min_hz", f_min_hz},
             {"width_ratio", width_ratio},    {"frequencies_hz", frequencies},
             {"step_deg", step_deg},          {"spacing_m", geom.spacing_m}};
    if (mode == "nlos") cfg["tx_angle_deg"] = theta_t_deg;
    table.config_json = cfg.dump();
    emit_table(std::move(table), common);
    return kExitOk;
  }
};

// ---------------------------------------------------------------- protocol

struct ProtocolCmd {
  CommonOptions common;
  std::string mode = "los";
  int n_elements = 64;
  double transmit_power_w = 1.0;
  double distance_m = 10.0;
  double theta_deg = 30.0;
  double dist_rx_m = 5.0;
  double dist_tx_m = 10.0;
  double theta_r_deg = 30.0;
  double theta_t_deg = 0.0;
  double f_min_hz = 8e9;
  double width_ratio = 1.8;
  int subchannels = 1024;
  bool no_path_gain = false;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app) {
    cmd = app.add_subcommand("protocol", "single pilot-sweep run: profile and selection");
    cmd->add_option("--mode", mode, "los or nlos (required, flag or config)");
    cmd->add_option("--N", n_elements, "number of elements");
    cmd->add_option("--pt-w", transmit_power_w, "transmit power, watts");
    cmd->add_option("--d", distance_m, "transmitter-receiver distance, meters (los)");
    cmd->add_option("--theta", theta_deg, "receiver angle, degrees (los)");
    cmd->add_option("--d-r", dist_rx_m, "surface-receiver distance, meters (nlos)");
    cmd->add_option("--d-t", dist_tx_m, "surface-transmitter distance, meters (nlos)");
    cmd->add_option("--theta-r", theta_r_deg, "receiver angle, degrees (nlos)");
    cmd->add_option("--theta-t", theta_t_deg, "transmitter angle, degrees (nlos)");
    cmd->add_option("--f-min", f_min_hz, "bottom of the frequency range, Hz");
    cmd->add_option("--W", width_ratio, "frequency range width");
    cmd->add_option("--S", subchannels, "number of subchannels");
    cmd->add_flag("--no-path-gain", no_path_gain, "evaluate small-scale channels only");
    common.add_to(cmd, "csv");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--mode", "mode", mode);
    common.merge(cmd, "--N", "N", n_elements);
    common.merge(cmd, "--pt-w", "pt_w", transmit_power_w);
    common.merge(cmd, "--d", "d_m", distance_m);
    common.merge(cmd, "--theta", "theta_deg", theta_deg);
    common.merge(cmd, "--d-r", "d_r_m", dist_rx_m);
    common.merge(cmd, "--d-t", "d_t_m", dist_tx_m);
    common.merge(cmd, "--theta-r", "theta_r_deg", theta_r_deg);
    common.merge(cmd, "--theta-t", "theta_t_deg", theta_t_deg);
    common.merge(cmd, "--f-min", "f_min_hz", f_min_hz);
    common.merge(cmd, "--W", "W", width_ratio);
    common.merge(cmd, "--S", "S", subchannels);
    if (cmd->count("--no-path-gain") == 0 && common.config.contains("path_gain")) {
      no_path_gain = !common.config.at("path_gain").get<bool>();
    }
    check_mode(mode);

    const double tx_angle = deg2rad(theta_t_deg);
    const movsig::UlaGeometry geom(n_elements, pinned_spacing(mode, f_min_hz, tx_angle));
    const movsig::Scenario scenario =
        mode == "los"
            ? movsig::Scenario{movsig::LosScenario{geom, distance_m, deg2rad(theta_deg),
                                                   movsig::uniform_precoder(n_elements)},
                               transmit_power_w, !no_path_gain}
            : movsig::Scenario{movsig::NlosScenario{geom, dist_rx_m, deg2rad(theta_r_deg),
                                                    dist_tx_m, tx_angle,
                                                    movsig::fis_matrix(n_elements)},
                               transmit_power_w, !no_path_gain};

    const movsig::FrequencyRange range(f_min_hz, width_ratio);
    const movsig::SubchannelGrid grid = movsig::subchannel_grid(range, subchannels);
    const movsig::SelectionResult result = movsig::pilot_sweep(scenario, grid);

    movsig::ResultTable table;
    table.columns = {"s", "f_hz", "power_w"};
    for (std::size_t s = 0; s < grid.frequencies_hz.size(); ++s) {
      table.rows.push_back({static_cast<double>(s + 1), grid.frequencies_hz[s],
                            result.profile_w[s]});
    }
    table.seed = common.seed;
    table.tool = tool_string();

    json cfg{{"command", "protocol"},
             {"mode", mode},
             {"n_elements", n_elements},
             {"transmit_power_w", transmit_power_w},
             {"f_min_hz", f_min_hz},
             {"width_ratio", width_ratio},
             {"subchannels", subchannels},
             {"include_path_gain", !no_path_gain},
             {"spacing_m", geom.spacing_m},
             {"bandwidth_hz", grid.bandwidth_hz},
             {"selected_subchannel", result.selected_index + 1},
             {"selected_f_hz", result.selected_frequency_hz},
             {"selected_power_w", result.profile_w[result.selected_index]}};
    if (mode == "los") {
      cfg["distance_m"] = distance_m;
      cfg["theta_deg"] = theta_deg;
    } else {
      cfg["dist_rx_m"] = dist_rx_m;
      cfg["dist_tx_m"] = dist_tx_m;
      cfg["theta_r_deg"] = theta_r_deg;
      cfg["theta_t_deg"] = theta_t_deg;
    }
    table.config_json = cfg.dump();
    emit_table(std::move(table), common);
    return kExitOk;
  }
};

// -------------------------------------------------------- sweep / average

struct SweepCmd {
  CommonOptions common;
  bool los = true;
  int n_elements = 64;
  double transmit_power_w = 1.0;
  double distance_m = 10.0;
  double dist_rx_m = 5.0;
  double dist_tx_m = 10.0;
  double theta_t_deg = 0.0;
  double f_min_hz = 8e9;
  double width_ratio = 1.8;
  int subchannels = 1024;
  double step_deg = 0.25;
  std::string baselines_csv;
  bool no_path_gain = false;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app, bool los_mode) {
    los = los_mode;
    cmd = app.add_subcommand(los ? "sweep-los" : "sweep-nlos",
                             los ? "received power versus receiver angle, direct link"
                                 : "received power versus receiver angle, surface-aided");
    cmd->add_option("--N", n_elements, "number of elements");
    cmd->add_option("--pt-w", transmit_power_w, "transmit power, watts");
    if (los) {
      cmd->add_option("--d", distance_m, "transmitter-receiver distance, meters");
    } else {
      cmd->add_option("--d-r", dist_rx_m, "surface-receiver distance, meters");
      cmd->add_option("--d-t", dist_tx_m, "surface-transmitter distance, meters");
      cmd->add_option("--theta-t", theta_t_deg, "transmitter angle, degrees");
    }
    cmd->add_option("--f-min", f_min_hz, "bottom of the frequency range, Hz");
    cmd->add_option("--W", width_ratio, "frequency range width");
    cmd->add_option("--S", subchannels, "number of subchannels");
    cmd->add_option("--step-deg", step_deg, "angle grid step, degrees");
    cmd->add_option("--baselines", baselines_csv, "comma-separated baseline list");
    cmd->add_flag("--no-path-gain", no_path_gain, "evaluate small-scale channels only");
    common.add_to(cmd, "csv");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--N", "N", n_elements);
    common.merge(cmd, "--pt-w", "pt_w", transmit_power_w);
    if (los) {
      common.merge(cmd, "--d", "d_m", distance_m);
    } else {
      common.merge(cmd, "--d-r", "d_r_m", dist_rx_m);
      common.merge(cmd, "--d-t", "d_t_m", dist_tx_m);
      common.merge(cmd, "--theta-t", "theta_t_deg", theta_t_deg);
    }
    common.merge(cmd, "--f-min", "f_min_hz", f_min_hz);
    common.merge(cmd, "--W", "W", width_ratio);
    common.merge(cmd, "--S", "S", subchannels);
    common.merge(cmd, "--step-deg", "step_deg", step_deg);
    common.merge(cmd, "--baselines", "baselines", baselines_csv);
    if (cmd->count("--no-path-gain") == 0 && common.config.contains("path_gain")) {
      no_path_gain = !common.config.at("path_gain").get<bool>();
    }

    movsig::SweepConfig config;
    if (los) {
      movsig::LosSetup setup;
      setup.n_elements = n_elements;
      setup.transmit_power_w = transmit_power_w;
      setup.distance_m = distance_m;
      setup.include_path_gain = !no_path_gain;
      config.setup = setup;
    } else {
      movsig::NlosSetup setup;
      setup.n_elements = n_elements;
      setup.transmit_power_w = transmit_power_w;
      setup.dist_rx_m = dist_rx_m;
      setup.dist_tx_m = dist_tx_m;
      setup.tx_angle_rad = deg2rad(theta_t_deg);
      setup.include_path_gain = !no_path_gain;
      config.setup = setup;
    }
    config.f_min_hz = f_min_hz;
    config.width_ratio = width_ratio;
    config.subchannels = subchannels;
    config.angle_step_rad = deg2rad(step_deg);
    config.baselines = parse_baselines(baselines_csv);
    config.seed = common.seed;
    config.threads = common.threads;
    emit_table(movsig::sweep_receiver_angle(config), common);
    return kExitOk;
  }
};

struct AverageCmd {
  CommonOptions common;
  std::string mode = "los";
  int n_elements = 64;
  double transmit_power_w = 1.0;
  double distance_m = 10.0;
  double dist_rx_m = 5.0;
  double dist_tx_m = 10.0;
  double theta_t_deg = 0.0;
  double f_min_hz = 8e9;
  std::vector<double> width_ratios{1.1, 1.8};
  std::vector<int> subchannel_counts{128, 1024};
  int trials = 10000;
  std::string baselines_csv;
  bool no_path_gain = false;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app) {
    cmd = app.add_subcommand("average", "received power averaged over receiver angles");
    cmd->add_option("--mode", mode, "los or nlos (required, flag or config)");
    cmd->add_option("--N", n_elements, "number of elements");
    cmd->add_option("--pt-w", transmit_power_w, "transmit power, watts");
    cmd->add_option("--d", distance_m, "transmitter-receiver distance, meters (los)");
    cmd->add_option("--d-r", dist_rx_m, "surface-receiver distance, meters (nlos)");
    cmd->add_option("--d-t", dist_tx_m, "surface-transmitter distance, meters (nlos)");
    cmd->add_option("--theta-t", theta_t_deg, "transmitter angle, degrees (nlos)");
    cmd->add_option("--f-min", f_min_hz, "bottom of the frequency range, Hz");
    cmd->add_option("--W-list", width_ratios, "width ratios, one table row each")
        ->delimiter(',');
    cmd->add_option("--S-list", subchannel_counts,
                    "subchannel counts (one, or one per width ratio)")
        ->delimiter(',');
    cmd->add_option("--trials", trials, "Monte-Carlo trials per row");
    cmd->add_option("--baselines", baselines_csv, "comma-separated baseline list");
    cmd->add_flag("--no-path-gain", no_path_gain, "evaluate small-scale channels only");
    common.add_to(cmd, "csv");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--mode", "mode", mode);
    common.merge(cmd, "--N", "N", n_elements);
    common.merge(cmd, "--pt-w", "pt_w", transmit_power_w);
    common.merge(cmd, "--d", "d_m", distance_m);
    common.merge(cmd, "--d-r", "d_r_m", dist_rx_m);
    common.merge(cmd, "--d-t", "d_t_m", dist_tx_m);
    common.merge(cmd, "--theta-t", "theta_t_deg", theta_t_deg);
    common.merge(cmd, "--f-min", "f_min_hz", f_min_hz);
    common.merge(cmd, "--W-list", "W_list", width_ratios);
    common.merge(cmd, "--S-list", "S_list", subchannel_counts);
    common.merge(cmd, "--trials", "trials", trials);
    common.merge(cmd, "--baselines", "baselines", baselines_csv);
    if (cmd->count("--no-path-gain") == 0 && common.config.contains("path_gain")) {
      no_path_gain = !common.config.at("path_gain").get<bool>();
    }
    check_mode(mode);

    movsig::AverageConfig config;
    if (mode == "los") {
      movsig::LosSetup setup;
      setup.n_elements = n_elements;
      setup.transmit_power_w = transmit_power_w;
      setup.distance_m = distance_m;
      setup.include_path_gain = !no_path_gain;
      config.setup = setup;
    } else {
      movsig::NlosSetup setup;
      setup.n_elements = n_elements;
      setup.transmit_power_w = transmit_power_w;
      setup.dist_rx_m = dist_rx_m;
      setup.dist_tx_m = dist_tx_m;
      setup.tx_angle_rad = deg2rad(theta_t_deg);
      setup.include_path_gain = !no_path_gain;
      config.setup = setup;
    }
    config.f_min_hz = f_min_hz;
    config.width_ratios = width_ratios;
    config.subchannel_counts = subchannel_counts;
    config.trials = trials;
    config.baselines = parse_baselines(baselines_csv);
    config.seed = common.seed;
    config.threads = common.threads;
    emit_table(movsig::average_over_angles(config), common);
    return kExitOk;
  }
};

struct ScalingCmd {
  CommonOptions common;
  std::vector<int> n_values{4, 16, 64, 256};
  int trials = 20000;
  double transmit_power_w = 1.0;
  CLI::App* cmd = nullptr;

  void setup(CLI::App& app) {
    cmd = app.add_subcommand("scaling",
                             "surface-size scaling of the two surface strategies");
    cmd->add_option("--N-list", n_values, "surface sizes, one table row each")
        ->delimiter(',');
    cmd->add_option("--trials", trials, "Monte-Carlo trials per size");
    cmd->add_option("--pt-w", transmit_power_w, "transmit power, watts");
    common.add_to(cmd, "csv");
  }

  int run() {
    common.load_config(cmd);
    common.merge(cmd, "--N-list", "N_list", n_values);
    common.merge(cmd, "--trials", "trials", trials);
    common.merge(cmd, "--pt-w", "pt_w", transmit_power_w);

    movsig::ScalingConfig config;
    config.n_values = n_values;
    config.trials = trials;
    config.transmit_power_w = transmit_power_w;
    config.seed = common.seed;
    config.threads = common.threads;
    emit_table(movsig::scaling_study(config), common);
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"movsig: frequency-domain smart radio environment toolkit"};
  app.require_subcommand(1);

  FreqOptCmd freq_opt;
  CoverageCmd coverage;
  PatternCmd pattern;
  ProtocolCmd protocol;
  SweepCmd sweep_los;
  SweepCmd sweep_nlos;
  AverageCmd average;
  ScalingCmd scaling;

  freq_opt.setup(app);
  coverage.setup(app);
  pattern.setup(app);
  protocol.setup(app);
  sweep_los.setup(app, true);
  sweep_nlos.setup(app, false);
  average.setup(app);
  scaling.setup(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (freq_opt.cmd->parsed()) return freq_opt.run();
    if (coverage.cmd->parsed()) return coverage.run();
    if (pattern.cmd->parsed()) return pattern.run();
    if (protocol.cmd->parsed()) return protocol.run();
    if (sweep_los.cmd->parsed()) return sweep_los.run();
    if (sweep_nlos.cmd->parsed()) return sweep_nlos.run();
    if (average.cmd->parsed()) return average.run();
    if (scaling.cmd->parsed()) return scaling.run();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
