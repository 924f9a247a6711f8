#include "cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "cli/csv.hpp"
#include "cli/presets.hpp"
#include "viscowave/duality.hpp"
#include "viscowave/error.hpp"
#include "viscowave/models_json.hpp"
#include "viscowave/response.hpp"
#include "viscowave/spectrum.hpp"
#include "viscowave/wavefront.hpp"

namespace viscowave::cli {

namespace {

constexpr double kPathLimit = 1e-5;

std::vector<double> grid_of(const GridSpec& g) {
  if (g.points == 1) return {g.min};
  if (g.spacing == Spacing::Linear && g.min == 0.0) {
    std::vector<double> v(g.points);
    for (int i = 0; i < g.points; ++i) v[i] = g.max * static_cast<double>(i) / (g.points - 1);
    return v;
  }
  return make_grid(g.min, g.max, g.points, g.spacing);
}

void describe(CsvWriter& out, const RunConfig& c) {
  const MediumSpec& m = *c.medium;
  out.comment(std::string("viscowave ") + to_string(c.command));
  out.comment("medium " + medium_to_json(m).dump());
  if (m.model().j0() > 0.0) out.comment("c0 = " + format_value(m.c0()) + " m/s");
  out.comment(std::string("material ") + to_string(classify(m.model())));
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

int creep(const RunConfig& c, CsvWriter& out) {
  describe(out, c);
  const CreepModel& model = c.medium->model();
  out.header({"t[s]", "J[1/Pa]", "dJdt[1/(Pa*s)]"});
  for (double t : grid_of(c.grid)) out.row({t, creep_value(model, t), creep_rate(model, t)});
  return kOk;
}

int response(const RunConfig& c, CsvWriter& out) {
  describe(out, c);
  const MediumSpec& m = *c.medium;
  auto run_path = [&](ResponsePath p) {
    return sweep(m, c.grid.min, c.grid.max, c.grid.points, c.grid.spacing, p, c.threads);
  };
  if (c.path != PathChoice::Both) {
    const auto rows = run_path(c.path == PathChoice::Direct ? ResponsePath::Direct : ResponsePath::Spectral);
    out.comment(std::string("path ") + (c.path == PathChoice::Direct ? "direct" : "spectral"));
    out.header({"omega[rad/s]", "A[1/m]", "D[1/m]", "c[m/s]", "Q[1]", "dB[dB/m]"});
    for (const auto& r : rows)
      out.row({r.omega, r.attenuation, r.dispersion, r.phase_speed, r.q_factor, db_per_meter(r.attenuation)});
    return kOk;
  }
  const auto direct = run_path(ResponsePath::Direct);
  const auto spectral = run_path(ResponsePath::Spectral);
  out.header({"omega[rad/s]", "A_direct[1/m]", "D_direct[1/m]", "c_direct[m/s]", "Q_direct[1]", "A_spectral[1/m]",
              "D_spectral[1/m]", "c_spectral[m/s]", "Q_spectral[1]"});
  double gap_a = 0.0, gap_d = 0.0;
  for (std::size_t i = 0; i < direct.size(); ++i) {
    const auto& d = direct[i];
    const auto& s = spectral[i];
    out.row({d.omega, d.attenuation, d.dispersion, d.phase_speed, d.q_factor, s.attenuation, s.dispersion,
             s.phase_speed, s.q_factor});
    gap_a = std::max(gap_a, relative_gap(d.attenuation, s.attenuation));
    gap_d = std::max(gap_d, relative_gap(d.dispersion, s.dispersion));
  }
  out.comment("max relative discrepancy A = " + format_value(gap_a) + ", D = " + format_value(gap_d) +
              " (limit " + format_value(kPathLimit) + ")");
  return std::max(gap_a, gap_d) > kPathLimit ? kNumericalFailure : kOk;
}

int spectrum(const RunConfig& c, CsvWriter& out) {
  describe(out, c);
  const AttenuationSpectrum spec(*c.medium);
  out.comment("total mass N = " + format_value(spec.total_mass()) + " 1/m");
  out.comment("g(0+) = " + format_value(g_zero(*c.medium)) + " 1/m");
  out.comment("support supremum = " + format_value(spec.support_sup()) + " 1/s");
  out.header({"r[1/s]", "h[s/m]"});
  for (double r : grid_of(c.grid)) out.row({r, spec.density(r)});
  return kOk;
}

int wavefront(const RunConfig& c, CsvWriter& out) {
  describe(out, c);
  const auto p = front_profile(*c.medium, c.distance, grid_of(c.grid), c.inversion, c.threads);
  const double scale = 1.0 / (2.0 * c.medium->rho());
  out.comment("distance = " + format_value(p.distance) + " m, arrival = " + format_value(p.arrival_time) + " s");
  out.comment(std::string("shock ") + (supports_shock(*c.medium) ? "yes" : "no") +
              ", jump = " + format_value(p.jump) + " m^3/kg");
  out.header({"tau[s]", "t[s]", "H[1]", "H_error[1]", "Hnear[1]", "G[m^3/kg]", "Gnear[m^3/kg]"});
  for (std::size_t i = 0; i < p.tau_grid.size(); ++i)
    out.row({p.tau_grid[i], p.arrival_time + p.tau_grid[i], p.h_values[i], p.h_error[i], p.near_front_values[i],
             p.green_values[i], scale * p.near_front_values[i]});
  return kOk;
}

int green(const RunConfig& c, CsvWriter& out) {
  describe(out, c);
  const MediumSpec& m = *c.medium;
  const double arrival = std::abs(c.x) / m.c0();
  const double margin = c.margin.value_or(1e-3 * arrival);
  out.comment("x = " + format_value(c.x) + " m, arrival = " + format_value(arrival) + " s, margin = " +
              format_value(margin) + " s");
  out.header({"tau[s]", "t[s]", "Gnear[m^3/kg]", "Gbromwich[m^3/kg]", "rel_diff[1]"});
  for (double tau : grid_of(c.grid)) {
    const double t = arrival + tau;
    const double near = green_near_front(m, t, c.x);
    const double full = green_bromwich(m, t, c.x, margin, c.inversion);
    out.row({tau, t, near, full, relative_gap(near, full)});
  }
  return kOk;
}

struct Check {
  std::string name;
  double value, tolerance;
  bool passed;
};

int verify(const RunConfig& c, CsvWriter& out) {
  describe(out, c);
  const MediumSpec& m = *c.medium;
  const CreepModel& model = m.model();
  const bool all = c.suite == "all";
  std::vector<Check> checks;
  numerics::DualityReport duality;

  double w = 1.0;
  if (model.family() == Family::StrickMainardi) w = model.as<StrickMainardi>().omega;
  if (model.family() == Family::JeffreysLomnitzStrick) w = model.as<JeffreysLomnitzStrick>().omega;

  if (all || c.suite == "duality") {
    duality = numerics::verify_duality(model, grid_of(c.grid), c.inversion);
    checks.push_back({"duality max residual", duality.max_residual, 1e-5, duality.max_residual <= 1e-5});
  }
  if (all || c.suite == "mass") {
    if (supports_shock(m)) {
      const double n = AttenuationSpectrum(m).total_mass();
      const double gap = relative_gap(n, g_zero(m));
      checks.push_back({"total mass vs g(0+) relative gap", gap, 1e-6, gap <= 1e-6});
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (double t : make_grid(1e-2 / w, 1e2 / w, 30, Spacing::Log)) {
      const double bound = m.rho() * m.c0() * creep_rate(model, t) / 2.0;
      worst = std::max(worst, (g_value(m, t) - bound) / bound);
    }
    checks.push_back({"max (g - rho c0 J'/2)/(rho c0 J'/2)", worst, 1e-9, worst <= 1e-9});
  }
  if (all || c.suite == "monotone") {
    const auto rate = numerics::check_complete_monotonicity([&](double t) { return creep_rate(model, t); },
                                                            1e-2 / w, 1e2 / w, 40, 1, 6, 1e-13);
    checks.push_back({"J' divided-difference violations (orders 1..6)", rate.worst_excess, 0.0, rate.passed});
    const auto g = numerics::check_complete_monotonicity([&](double t) { return g_value(m, t); }, 1e-2 / w,
                                                         1e2 / w, 40, 1, 5, 1e-9);
    checks.push_back({"g divided-difference violations (orders 1..5)", g.worst_excess, 0.0, g.passed});
    const auto rows = sweep(m, 1e-2 * w, 1e4 * w, 60, Spacing::Log, ResponsePath::Direct, c.threads);
    double drop = 0.0, excess = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      drop = std::max(drop, (rows[i - 1].attenuation - rows[i].attenuation) / rows[i].attenuation);
    for (const auto& r : rows) excess = std::max(excess, r.phase_speed / m.c0() - 1.0);
    checks.push_back({"max relative decrease of A", drop, 1e-12, drop <= 1e-12});
    checks.push_back({"max c/c0 - 1", excess, 1e-12, excess <= 1e-12});
  }
  if (all || c.suite == "paths") {
    double gap = 0.0;
    for (double om : make_grid(1e-2 * w, 1e2 * w, 50, Spacing::Log)) {
      const auto d = response_direct(m, om);
      const auto s = response_spectral(m, om);
      gap = std::max({gap, relative_gap(d.attenuation, s.attenuation), relative_gap(d.dispersion, s.dispersion)});
    }
    checks.push_back({"direct vs spectral A, D relative gap", gap, 1e-6, gap <= 1e-6});
  }

  bool passed = true;
  for (const auto& ch : checks) {
    out.comment((ch.passed ? "PASS " : "FAIL ") + ch.name + " = " + format_value(ch.value) + " (tolerance " +
                format_value(ch.tolerance) + ")");
    passed = passed && ch.passed;
  }
  if (!duality.t_grid.empty()) {
    out.header({"t[s]", "convolution[s]", "residual[1]"});
    for (std::size_t i = 0; i < duality.t_grid.size(); ++i)
      out.row({duality.t_grid[i], duality.convolution[i], duality.residual[i]});
  }
  return passed ? kOk : kNumericalFailure;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& stream) {
  CsvWriter out(stream);
  switch (c.command) {
    case Command::Creep: return creep(c, out);
    case Command::Response: return response(c, out);
    case Command::Spectrum: return spectrum(c, out);
    case Command::Wavefront: return wavefront(c, out);
    case Command::Green: return green(c, out);
    case Command::Verify: return verify(c, out);
    case Command::Figure: write_figure(c.figure, out, c.threads); return kOk;
  }
  return kConfigFailure;
}

int run_main(int argc, const char* const* argv) {
  RunConfig config;
  try {
    config = parse_command_line(argc, argv);
  } catch (const EarlyExit& e) {
    return e.status;
  } catch (const ConfigError& e) {
    std::cerr << "viscowave: " << e.what() << '\n';
    return kConfigFailure;
  }

  std::ofstream file;
  if (config.output != "-") {
    file.open(config.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "viscowave: cannot open output '" << config.output << "'\n";
      return kIoFailure;
    }
  }
  std::ostringstream buffer;
  int status = kOk;
  try {
    status = execute(config, buffer);
  } catch (const Error& e) {
    std::cerr << "viscowave: " << e.what() << '\n';
    const bool input = e.kind() == ErrorKind::Configuration || e.kind() == ErrorKind::Precondition;
    return input ? kConfigFailure : kNumericalFailure;
  }
  std::ostream& sink = config.output == "-" ? std::cout : file;
  sink << buffer.str();
  sink.flush();
  if (!sink) {
    std::cerr << "viscowave: write failed\n";
    return kIoFailure;
  }
  if (status == kNumericalFailure) std::cerr << "viscowave: check failed, see the report\n";
  return status;
}

}  // namespace viscowave::cli
