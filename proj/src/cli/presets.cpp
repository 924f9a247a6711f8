#include "cli/presets.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "viscowave/error.hpp"
#include "viscowave/response.hpp"
#include "viscowave/specfun.hpp"
#include "viscowave/spectrum.hpp"
#include "viscowave/wavefront.hpp"

namespace viscowave::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Columns are collected whole and written row by row at the end.
struct Columns {
  std::vector<std::string> names;
  std::vector<std::vector<double>> data;

  void add(std::string name, std::vector<double> values) {
    names.push_back(std::move(name));
    data.push_back(std::move(values));
  }

  void write(CsvWriter& out) const {
    out.header(names);
    const std::size_t rows = data.empty() ? 0 : data.front().size();
    std::vector<double> row(data.size());
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < data.size(); ++k) row[k] = data[k][i];
      out.row(row);
    }
  }
};

void fig1(CsvWriter& out) {
  const double j0 = 4.1e-11;
  const double m0 = 16e-11 / (specfun::kPi * 50.0);
  out.comment("fig1: Strick-Mainardi creep compliance, Omega = 1 1/s");
  out.comment("J0 = " + format_value(j0) + " 1/Pa, M0 = 16e-11/(pi*50) = " + format_value(m0) + " 1/Pa");
  Columns cols;
  const auto t = make_grid(1e-3, 1e3, 121, Spacing::Log);
  cols.add("t[s]", t);
  for (double alpha : {-0.5, 0.0, 0.5}) {
    const auto model = CreepModel::strick_mainardi(j0, m0, alpha, 1.0);
    std::vector<double> j;
    for (double s : t) j.push_back(creep_value(model, s));
    cols.add("J_alpha=" + num(alpha) + "[1/Pa]", j);
  }
  cols.write(out);
}

void fig2(CsvWriter& out, int threads) {
  const double c0 = 2851.0;
  const double j0 = 4.1e-11;
  out.comment("fig2: Strick-Mainardi attenuation and phase speed, Omega = 1 1/s");
  out.comment("c0 = 2851 m/s, J0 = 4.1e-11 1/Pa, rho = 1/(c0^2 J0)");
  out.comment("group 'rel': M0 = 0.026 J0 (M0/J0 read as a ratio; gives Q near 50 mid-band)");
  out.comment("group 'lit': M0 = 0.026 1/Pa (the caption value taken literally)");
  Columns cols;
  const auto omega = make_grid(1e-2, 1e6, 161, Spacing::Log);
  cols.add("omega[rad/s]", omega);
  const std::pair<const char*, double> groups[] = {{"rel", 0.026 * j0}, {"lit", 0.026}};
  for (const auto& [label, m0] : groups) {
    for (double alpha : {0.3, -0.3}) {
      const auto medium = MediumSpec::with_front_speed(CreepModel::strick_mainardi(j0, m0, alpha, 1.0), c0);
      const auto rows = sweep(medium, omega.front(), omega.back(), static_cast<int>(omega.size()), Spacing::Log,
                              ResponsePath::Direct, threads);
      std::vector<double> a, c, q, db;
      for (const auto& r : rows) {
        a.push_back(r.attenuation);
        c.push_back(r.phase_speed);
        q.push_back(r.q_factor);
        db.push_back(db_per_meter(r.attenuation));
      }
      const std::string tag = std::string(label) + "_alpha=" + num(alpha);
      cols.add("A_" + tag + "[1/m]", a);
      cols.add("c_" + tag + "[m/s]", c);
      cols.add("Q_" + tag + "[1]", q);
      cols.add("dB_" + tag + "[dB/m]", db);
    }
  }
  cols.write(out);
}

void fig3(CsvWriter& out, int threads) {
  const double c0 = 1000.0;
  const double j0 = 1.0;
  out.comment("fig3: Strick-Mainardi Green's function near the wavefront");
  out.comment("Omega = M0 = 1, c0 = 1000 m/s, J0 = 1 1/Pa, rho = 1/(c0^2 J0)");
  out.comment("Gnear = exp(-g(tau) r)/(2 rho), Hnear = 2 rho Gnear; H and G from inverse Laplace transform");
  out.comment("panel a: alpha = 0.5; panel b: alpha = -0.5; panel c: r = 5000 m");
  out.comment("panel c columns tagged 'extrapolated' use alpha values outside the caption");
  std::vector<double> tau(101);
  for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = 0.01 * static_cast<double>(i);
  Columns cols;
  cols.add("tau[s]", tau);
  struct Curve {
    std::string panel;
    double alpha, r;
    bool extrapolated;
  };
  std::vector<Curve> curves;
  for (double r : {1000.0, 2000.0, 5000.0}) curves.push_back({"a", 0.5, r, false});
  for (double r : {1000.0, 2000.0, 5000.0}) curves.push_back({"b", -0.5, r, false});
  for (double alpha : {-0.75, -0.5, 0.0, 0.5, 0.75})
    curves.push_back({"c", alpha, 5000.0, alpha != 0.5 && alpha != -0.5});
  for (const auto& cv : curves) {
    const auto medium = MediumSpec::with_front_speed(CreepModel::strick_mainardi(j0, 1.0, cv.alpha, 1.0), c0);
    const auto profile = front_profile(medium, cv.r, tau, numerics::InversionConfig::dehoog(), threads);
    const double scale = 1.0 / (2.0 * medium.rho());
    std::vector<double> g_near, g_full;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      g_near.push_back(scale * profile.near_front_values[i]);
      g_full.push_back(profile.green_values[i]);
    }
    const std::string tag =
        cv.panel + "_alpha=" + num(cv.alpha) + "_r=" + num(cv.r) + (cv.extrapolated ? "_extrapolated" : "");
    cols.add("Gnear_" + tag + "[m^3/kg]", g_near);
    cols.add("Hnear_" + tag + "[1]", profile.near_front_values);
    cols.add("G_" + tag + "[m^3/kg]", g_full);
    cols.add("H_" + tag + "[1]", profile.h_values);
  }
  cols.write(out);
}

void fig4(CsvWriter& out, int threads) {
  out.comment("fig4: Jeffreys-Lomnitz-Strick attenuation and phase speed");
  out.comment("J0 = M0 = Omega = 1, rho = 1 (c0 = 1)");
  Columns cols;
  const auto omega = make_grid(1e-2, 1e4, 121, Spacing::Log);
  cols.add("omega[rad/s]", omega);
  for (double alpha : {0.8, 0.0, -0.8}) {
    const MediumSpec medium(CreepModel::jls(1.0, 1.0, alpha, 1.0), 1.0);
    const auto rows = sweep(medium, omega.front(), omega.back(), static_cast<int>(omega.size()), Spacing::Log,
                            ResponsePath::Direct, threads);
    std::vector<double> a, c;
    for (const auto& r : rows) {
      a.push_back(r.attenuation);
      c.push_back(r.phase_speed);
    }
    cols.add("A_alpha=" + num(alpha) + "[1/m]", a);
    cols.add("c_alpha=" + num(alpha) + "[m/s]", c);
  }
  cols.write(out);
}

}  // namespace

void write_figure(const std::string& name, CsvWriter& out, int threads) {
  if (name == "fig1") fig1(out);
  else if (name == "fig2") fig2(out, threads);
  else if (name == "fig3") fig3(out, threads);
  else if (name == "fig4") fig4(out, threads);
  else fail(ErrorKind::Configuration, "unknown figure preset '" + name + "'");
}

}  // namespace viscowave::cli
