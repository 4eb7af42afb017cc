// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. The CLI binary path may be passed
// as argv[1]; criterion 10 uses it for the end-to-end determinism check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "movsig/channel.hpp"
#include "movsig/experiments.hpp"
#include "movsig/freqplan.hpp"
#include "movsig/protocol.hpp"
#include "movsig/reconfig.hpp"
#include "movsig/rng.hpp"
#include "movsig/units.hpp"

using namespace movsig;

namespace {

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

struct Checker {
  int failures = 0;

  void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

std::string csv_of(const ResultTable& table) {
  std::ostringstream out;
  table.write_csv(out);
  return out.str();
}

std::size_t column_of(const ResultTable& table, const std::string& name) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (table.columns[i] == name) return i;
  }
  throw std::logic_error("missing column " + name);
}

// ---------------------------------------------------------------------------
// 1. Direct-link bound attainment at the closed-form frequency.
void criterion_1(Checker& check) {
  const double fa = 8e9;
  double worst = 0.0;
  for (const int n : {4, 16, 64}) {
    const UlaGeometry geom(n, kSpeedOfLight / fa);
    const Scenario base{LosScenario{geom, 10.0, 0.0, uniform_precoder(n)}, 1.0, false};
    for (int t = 0; t < 1000; ++t) {
      CounterRng rng(101, static_cast<std::uint64_t>(n) * 100000 + t);
      double theta = rng.angle();
      // excluded degenerate direction; tiny |sin| only stresses trig argument
      // reduction without testing anything new
      while (std::abs(std::sin(theta)) < 1e-6) theta = rng.angle();
      Scenario sc = base;
      std::get<LosScenario>(sc.link).angle_rad = theta;
      const auto opt = optimal_frequency_los(theta, fa);
      const double power = received_power(sc, *opt.f_star_hz);
      worst = std::max(worst, std::abs(power - n) / n);
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "worst relative error %.3e (tolerance 1e-9)", worst);
  check.report(1, "direct-link bound attainment", worst <= 1e-9, detail);
}

// ---------------------------------------------------------------------------
// 2. Cascaded bound attainment, including the specular direction.
void criterion_2(Checker& check) {
  const double fa = 8e9;
  double worst = 0.0;
  for (const int n : {4, 16, 64}) {
    const UlaGeometry geom(n, kSpeedOfLight / fa);
    for (int t = 0; t < 1000; ++t) {
      CounterRng rng(202, static_cast<std::uint64_t>(n) * 100000 + t);
      double rx = rng.angle();
      double tx = rng.angle();
      while (std::abs(std::sin(rx) + std::sin(tx)) < 1e-6) {
        rx = rng.angle();
        tx = rng.angle();
      }
      const Scenario sc{NlosScenario{geom, 5.0, rx, 10.0, tx, fis_matrix(n)}, 1.0, false};
      const auto opt = optimal_frequency_nlos(rx, tx, fa);
      const double power = received_power(sc, *opt.f_star_hz);
      const double bound = 4.0 * n * n;
      worst = std::max(worst, std::abs(power - bound) / bound);
    }
  }
  // Specular receiver direction: any frequency attains the bound.
  {
    const int n = 64;
    const UlaGeometry geom(n, kSpeedOfLight / fa);
    CounterRng rng(203, 0);
    for (int t = 0; t < 10; ++t) {
      const double tx = rng.angle();
      const Scenario sc{NlosScenario{geom, 5.0, -tx, 10.0, tx, fis_matrix(n)}, 1.0, false};
      const double f = rng.uniform(2e9, 20e9);
      const double bound = 4.0 * n * n;
      worst = std::max(worst, std::abs(received_power(sc, f) - bound) / bound);
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "worst relative error %.3e (tolerance 1e-9)", worst);
  check.report(2, "cascaded bound attainment", worst <= 1e-9, detail);
}

// ---------------------------------------------------------------------------
// 3. Coverage boundary angles against their published roundings.
void criterion_3(Checker& check) {
  bool pass = true;
  std::ostringstream detail;

  const double theta_plus = rad2deg(*coverage_los(1.8).theta_plus_rad);
  pass &= std::abs(theta_plus - 33.75) <= 0.01;
  detail << "theta+=" << theta_plus;

  const double minus50 = rad2deg(*coverage_nlos(1.8, deg2rad(-50.0)).theta_r_minus_rad);
  pass &= std::abs(minus50 - (-12.42)) <= 0.01;
  detail << " thetaR-(-50)=" << minus50;

  const CoverageReport r10 = coverage_nlos(1.8, deg2rad(-10.0));
  const double minus10 = rad2deg(*r10.theta_r_minus_rad);
  const double plus10 = rad2deg(*r10.theta_r_plus_rad);
  pass &= std::abs(minus10 - (-28.58)) <= 0.01;
  pass &= std::abs(plus10 - 55.66) <= 0.01;
  detail << " thetaR-(-10)=" << minus10 << " thetaR+(-10)=" << plus10;

  check.report(3, "coverage boundary angles", pass, detail.str());
}

// ---------------------------------------------------------------------------
// 4. Closed-form covered sets against the numeric frequency-membership sweep.
void criterion_4(Checker& check) {
  const double step = 1e-3;
  int checked = 0;
  bool pass = true;
  for (const double w : {1.1, 1.2, 1.4, 1.8, 2.0}) {
    pass &= coverage_numeric_check(coverage_los(w), step);
    ++checked;
    for (const double tx_deg : {0.0, -10.0, -30.0, -50.0, -90.0}) {
      pass &= coverage_numeric_check(coverage_nlos(w, deg2rad(tx_deg)), step);
      ++checked;
    }
  }
  check.report(4, "coverage closed form vs numeric sweep", pass,
               std::to_string(checked) + " configurations at 1 mrad");
}

// ---------------------------------------------------------------------------
// 5. Continuous-surface optimum equals its closed-form power per realization.
void criterion_5(Checker& check) {
  const ScalingSamples s = scaling_samples(64, 10000, 1.0, 505, worker_threads());
  double worst = 0.0;
  for (std::size_t t = 0; t < s.ris_power_w.size(); ++t) {
    worst = std::max(worst, std::abs(s.ris_power_w[t] - s.ris_closed_form_w[t]) /
                                s.ris_closed_form_w[t]);
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail), "worst relative error %.3e over 10000 draws", worst);
  check.report(5, "continuous-surface power identity", worst <= 1e-9, detail);
}

// ---------------------------------------------------------------------------
// 6. Scaling study: exact law for the fixed surface, approximate law for the
// reconfigurable one, and the large-N power ratio.
//
// The approximate law models hR hT as complex Gaussian. For these
// deterministic far-field links at half-wavelength spacing, |hR hT| follows a
// Dirichlet-kernel curve whose mean grows like log N rather than sqrt(N), so
// the simulated mean sits measurably below the law at mid-range N (about -6%
// to -8% for N in {16, 64, 256}, shrinking only past N ~ 4096). The 5% gate
// is kept as specified and is expected to fail at those sizes; see the
// project notes.
void criterion_6(Checker& check) {
  bool pass = true;
  std::ostringstream detail;
  double fis_mean_256 = 0.0;
  double ris_mean_256 = 0.0;
  for (const int n : {4, 16, 64, 256}) {
    const ScalingSamples s = scaling_samples(n, 20000, 1.0, 606, worker_threads());
    const double trials = static_cast<double>(s.fis_power_w.size());
    const double fis_bound = 4.0 * n * n;

    double fis_mean = 0.0, ris_mean = 0.0, fis_worst = 0.0;
    for (std::size_t t = 0; t < s.fis_power_w.size(); ++t) {
      fis_mean += s.fis_power_w[t];
      ris_mean += s.ris_power_w[t];
      fis_worst = std::max(fis_worst, std::abs(s.fis_power_w[t] - fis_bound) / fis_bound);
    }
    fis_mean /= trials;
    ris_mean /= trials;

    double fis_var = 0.0, ris_var = 0.0;
    for (std::size_t t = 0; t < s.fis_power_w.size(); ++t) {
      fis_var += (s.fis_power_w[t] - fis_mean) * (s.fis_power_w[t] - fis_mean);
      ris_var += (s.ris_power_w[t] - ris_mean) * (s.ris_power_w[t] - ris_mean);
    }
    const double fis_sd = std::sqrt(fis_var / (trials - 1.0));
    const double ris_se = std::sqrt(ris_var / (trials - 1.0) / trials);

    const bool fis_ok = fis_worst <= 1e-9 && fis_sd <= 1e-9 * fis_bound;
    const double theory = static_cast<double>(n) * n + std::sqrt(kPi * n) * n + n;
    const double tolerance = std::max(3.0 * ris_se, 0.05 * theory);
    const bool ris_ok = std::abs(ris_mean - theory) <= tolerance;
    pass &= fis_ok && ris_ok;

    char line[160];
    std::snprintf(line, sizeof(line), "N=%d fis %s; ris mean %.4e vs law %.4e (%+.2f%%) %s. ",
                  n, fis_ok ? "exact" : "NOT exact", ris_mean, theory,
                  100.0 * (ris_mean - theory) / theory, ris_ok ? "ok" : "outside gate");
    detail << line;
    if (n == 256) {
      fis_mean_256 = fis_mean;
      ris_mean_256 = ris_mean;
    }
  }
  const double ratio = fis_mean_256 / ris_mean_256;
  const bool ratio_ok = ratio >= 3.0 && ratio <= 4.0;
  pass &= ratio_ok;
  detail << "ratio(256)=" << ratio << (ratio_ok ? "" : " outside [3,4]");
  check.report(6, "surface-size scaling laws", pass, detail.str());
}

// ---------------------------------------------------------------------------
// 7. Pilot sweep equals an independent argmax oracle, ties included.
void criterion_7(Checker& check) {
  int mismatches = 0;
  for (int t = 0; t < 950; ++t) {
    CounterRng rng(707, t);
    const int n = 1 + static_cast<int>(rng.uniform(0, 16));
    const UlaGeometry geom(n, kSpeedOfLight / rng.uniform(4e9, 16e9));
    const bool path_gain = rng.uniform01() < 0.5;
    const Scenario sc =
        rng.uniform01() < 0.5
            ? Scenario{LosScenario{geom, rng.uniform(1, 30), rng.angle(),
                                   uniform_precoder(n)},
                       rng.uniform(0.1, 4.0), path_gain}
            : Scenario{NlosScenario{geom, rng.uniform(1, 20), rng.angle(),
                                    rng.uniform(1, 20), rng.angle(), fis_matrix(n)},
                       rng.uniform(0.1, 4.0), path_gain};
    const FrequencyRange range(rng.uniform(1e9, 12e9), 1.0 + rng.uniform(0.05, 1.0));
    const SubchannelGrid grid =
        subchannel_grid(range, 2 + static_cast<int>(rng.uniform(0, 62)));
    const SelectionResult sel = pilot_sweep(sc, grid);

    std::size_t oracle = 0;
    for (std::size_t s = 0; s < grid.frequencies_hz.size(); ++s) {
      if (received_power(sc, grid.frequencies_hz[s]) > received_power(sc, grid.frequencies_hz[oracle]))
        oracle = s;
    }
    if (sel.selected_index != oracle) ++mismatches;
  }
  // Exact ties: one antenna at broadside with the distance an integer number
  // of wavelengths on every subchannel, so the profile is perfectly flat and
  // the lowest index must win.
  for (int m = 1; m <= 50; ++m) {
    const UlaGeometry geom(1, 0.1);
    const Scenario sc{LosScenario{geom, m * kSpeedOfLight, 0.0, uniform_precoder(1)},
                      2.0, false};
    const SubchannelGrid grid = subchannel_grid(FrequencyRange(1.0, 2.0), 3);
    const SelectionResult sel = pilot_sweep(sc, grid);
    bool flat = true;
    for (double p : sel.profile_w) flat &= (p == sel.profile_w.front());
    if (!flat || sel.selected_index != 0) ++mismatches;
  }
  check.report(7, "pilot sweep equals the selection oracle", mismatches == 0,
               std::to_string(mismatches) + " mismatches in 1000 scenarios");
}

// ---------------------------------------------------------------------------
// 8. One-bit closed forms against their exhaustive oracles: exact dominance,
// and the average achieved fraction of the oracle power.
//
// The sign rules anchor the co-phasing to the real axis, so channels that are
// nearly aligned at a common phase close to +-pi/2 lose most of their power
// while the oracle re-aligns freely. Over random link geometries this prices
// the closed forms at about 86-87% of the oracle on average, not 90%; the
// gate is kept as specified and is expected to fail. See the project notes.
void criterion_8(Checker& check) {
  const int n = 10;
  double egt_closed_sum = 0.0, egt_oracle_sum = 0.0;
  double ris_closed_sum = 0.0, ris_oracle_sum = 0.0;
  int dominance_violations = 0;
  for (int t = 0; t < 500; ++t) {
    CounterRng rng(808, t);
    const UlaGeometry geom(n, kSpeedOfLight / 8e9);
    const Wavelength wl = Wavelength::from_frequency_hz(rng.uniform(8e9, 14.4e9));

    const CVec h = los_channel(geom, FarFieldLink(rng.uniform(1, 20), rng.angle()), wl);
    const double egt_closed = std::norm(dot(h, egt_one_bit(h).weights));
    const double egt_oracle = std::norm(dot(h, egt_exhaustive(h).weights));
    if (egt_oracle < egt_closed) ++dominance_violations;
    egt_closed_sum += egt_closed;
    egt_oracle_sum += egt_oracle;

    const CVec h_rx = los_channel(geom, FarFieldLink(rng.uniform(1, 20), rng.angle()), wl);
    const CVec h_tx = los_channel(geom, FarFieldLink(rng.uniform(1, 20), rng.angle()), wl);
    const double ris_closed = std::norm(cascaded_channel(h_rx, ris_one_bit(h_rx, h_tx), h_tx));
    const double ris_oracle =
        std::norm(cascaded_channel(h_rx, ris_one_bit_exhaustive(h_rx, h_tx), h_tx));
    if (ris_oracle < ris_closed) ++dominance_violations;
    ris_closed_sum += ris_closed;
    ris_oracle_sum += ris_oracle;
  }
  const double egt_fraction = egt_closed_sum / egt_oracle_sum;
  const double ris_fraction = ris_closed_sum / ris_oracle_sum;
  const bool pass =
      dominance_violations == 0 && egt_fraction >= 0.90 && ris_fraction >= 0.90;
  char detail[192];
  std::snprintf(detail, sizeof(detail),
                "average fraction of oracle power: egt %.4f, ris %.4f (floor 0.90); "
                "dominance violations %d",
                egt_fraction, ris_fraction, dominance_violations);
  check.report(8, "one-bit quantizer oracle gap", pass, detail);
}

// ---------------------------------------------------------------------------
// 9. Ordering claims at the reference numerology.
void criterion_9(Checker& check) {
  const int threads = worker_threads();
  bool pass = true;
  std::ostringstream detail;

  {
    AverageConfig cfg;
    cfg.setup = LosSetup{};
    cfg.width_ratios = {1.8};
    cfg.subchannel_counts = {1024};
    cfg.trials = 10000;
    cfg.baselines = {Baseline::kMovable, Baseline::kEgtOneBit};
    cfg.seed = 909;
    cfg.threads = threads;
    const ResultTable t = average_over_angles(cfg);
    const double movable = t.rows[0][column_of(t, "mean_power_w_movable")];
    const double egt = t.rows[0][column_of(t, "mean_power_w_egt_1bit")];
    pass &= movable > egt;
    detail << "los W=1.8: movable/egt=" << movable / egt << "; ";
  }

  for (const double tx_deg : {0.0, -90.0}) {
    AverageConfig cfg;
    NlosSetup setup;
    setup.tx_angle_rad = deg2rad(tx_deg);
    cfg.setup = setup;
    cfg.width_ratios = {1.1, 1.8};
    cfg.subchannel_counts = {128, 1024};
    cfg.trials = 10000;
    cfg.baselines = {Baseline::kFisMovable, Baseline::kRisOneBit};
    cfg.seed = 909;
    cfg.threads = threads;
    const ResultTable t = average_over_angles(cfg);
    for (const auto& row : t.rows) {
      const double fis = row[column_of(t, "mean_power_w_fis_movable")];
      const double ris = row[column_of(t, "mean_power_w_ris_1bit")];
      pass &= fis > ris;
      detail << "nlos tx=" << tx_deg << " W=" << row[0] << ": fis/ris=" << fis / ris
             << "; ";
    }
  }

  {
    SweepConfig cfg;
    cfg.setup = LosSetup{};
    cfg.baselines = {Baseline::kMovable, Baseline::kEgtOneBit, Baseline::kMovableEgt};
    cfg.seed = 909;
    cfg.threads = threads;
    const ResultTable t = sweep_receiver_angle(cfg);
    int violations = 0;
    for (const auto& row : t.rows) {
      const double joint = row[column_of(t, "power_w_movable_egt")];
      if (joint < row[column_of(t, "power_w_movable")] ||
          joint < row[column_of(t, "power_w_egt_1bit")])
        ++violations;
    }
    pass &= violations == 0;
    detail << "los joint dominance violations=" << violations << "; ";
  }
  {
    SweepConfig cfg;
    NlosSetup setup;
    setup.tx_angle_rad = deg2rad(-50.0);
    cfg.setup = setup;
    cfg.baselines = {Baseline::kFisMovable, Baseline::kRisOneBit, Baseline::kMovableRis};
    cfg.seed = 909;
    cfg.threads = threads;
    const ResultTable t = sweep_receiver_angle(cfg);
    int violations = 0;
    for (const auto& row : t.rows) {
      const double joint = row[column_of(t, "power_w_movable_ris")];
      if (joint < row[column_of(t, "power_w_fis_movable")] ||
          joint < row[column_of(t, "power_w_ris_1bit")])
        ++violations;
    }
    pass &= violations == 0;
    detail << "nlos joint dominance violations=" << violations;
  }

  check.report(9, "reference-numerology ordering claims", pass, detail.str());
}

// ---------------------------------------------------------------------------
// 10. Byte-identical reproducible output at worker counts 1 and 8.
void criterion_10(Checker& check, const char* cli_path) {
  bool pass = true;
  std::ostringstream detail;

  {
    AverageConfig cfg;
    cfg.setup = LosSetup{};
    cfg.width_ratios = {1.3};
    cfg.subchannel_counts = {64};
    cfg.trials = 500;
    cfg.seed = 33;
    cfg.threads = 1;
    const std::string serial = csv_of(average_over_angles(cfg));
    cfg.threads = 8;
    pass &= serial == csv_of(average_over_angles(cfg));

    SweepConfig sweep;
    LosSetup setup;
    setup.n_elements = 16;
    sweep.setup = setup;
    sweep.subchannels = 32;
    sweep.angle_step_rad = deg2rad(2.0);
    sweep.seed = 33;
    sweep.threads = 1;
    const std::string sweep_serial = csv_of(sweep_receiver_angle(sweep));
    sweep.threads = 8;
    pass &= sweep_serial == csv_of(sweep_receiver_angle(sweep));

    ScalingConfig scaling;
    scaling.n_values = {16};
    scaling.trials = 500;
    scaling.seed = 33;
    scaling.threads = 1;
    const std::string scaling_serial = csv_of(scaling_study(scaling));
    scaling.threads = 8;
    pass &= scaling_serial == csv_of(scaling_study(scaling));
    detail << "in-process tables " << (pass ? "identical" : "DIFFER") << "; ";
  }

  if (cli_path == nullptr) {
    pass = false;
    detail << "cli path missing";
  } else {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "movsig_acceptance";
    fs::create_directories(dir);
    const fs::path a = dir / "avg_t1.csv";
    const fs::path b = dir / "avg_t8.csv";
    const fs::path c = dir / "avg_t1_rerun.csv";
    const std::string base = std::string(cli_path) +
                             " average --mode nlos --N 16 --W-list 1.2 --S-list 32"
                             " --trials 300 --seed 5 --reproducible -o ";
    const int rc1 = std::system((base + a.string() + " --threads 1").c_str());
    const int rc2 = std::system((base + b.string() + " --threads 8").c_str());
    const int rc3 = std::system((base + c.string() + " --threads 1").c_str());
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream out;
      out << in.rdbuf();
      return out.str();
    };
    const bool cli_ok = rc1 == 0 && rc2 == 0 && rc3 == 0 && !slurp(a).empty() &&
                        slurp(a) == slurp(b) && slurp(a) == slurp(c);
    pass &= cli_ok;
    detail << "cli files " << (cli_ok ? "identical" : "DIFFER");
  }
  check.report(10, "deterministic output across worker counts", pass, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli_path = argc > 1 ? argv[1] : nullptr;
  Checker check;
  criterion_1(check);
  criterion_2(check);
  criterion_3(check);
  criterion_4(check);
  criterion_5(check);
  criterion_6(check);
  criterion_7(check);
  criterion_8(check);
  criterion_9(check);
  criterion_10(check, cli_path);
  std::printf("%d of 10 criteria passed\n", 10 - check.failures);
  return check.failures == 0 ? 0 : 1;
}
