#include "cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>

#include "CLI11.hpp"
#include "viscowave/error.hpp"
#include "viscowave/models_json.hpp"

namespace viscowave::cli {

using nlohmann::json;

const char* to_string(Command command) noexcept {
  switch (command) {
    case Command::Creep: return "creep";
    case Command::Response: return "response";
    case Command::Spectrum: return "spectrum";
    case Command::Wavefront: return "wavefront";
    case Command::Green: return "green";
    case Command::Verify: return "verify";
    case Command::Figure: return "figure";
  }
  return "unknown";
}

namespace {

constexpr Command kCommands[] = {Command::Creep,     Command::Response, Command::Spectrum, Command::Wavefront,
                                 Command::Green,     Command::Verify,   Command::Figure};

double number(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string text(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ConfigError(std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

MediumSpec build_medium(const json& model) {
  if (!model.is_object()) throw ConfigError("a model is required (--model and its parameters)");
  try {
    CreepModel creep = model_from_json(model);
    if (model.contains("rho") && model.contains("c0")) throw ConfigError("give either rho or c0, not both");
    if (model.contains("rho")) return MediumSpec(std::move(creep), number(model, "rho"));
    const double c0 = number_or(model, "c0", 1.0);
    if (!(creep.j0() > 0.0)) throw ConfigError("rho is required when J0 = 0");
    return MediumSpec::with_front_speed(std::move(creep), c0);
  } catch (const Error& e) {
    throw ConfigError(e.detail());
  }
}

// Characteristic rate used to scale default grids.
double rate_scale(const CreepModel& model) {
  switch (model.family()) {
    case Family::StrickMainardi: return model.as<StrickMainardi>().omega;
    case Family::JeffreysLomnitzStrick: return model.as<JeffreysLomnitzStrick>().omega;
    case Family::Andrade: return 1.0;
  }
  return 1.0;
}

GridSpec default_grid(const RunConfig& c) {
  const double w = c.medium ? rate_scale(c.medium->model()) : 1.0;
  switch (c.command) {
    case Command::Creep: return {1e-2 / w, 1e2 / w, 100, Spacing::Log};
    case Command::Response: return {1e-2 * w, 1e4 * w, 100, Spacing::Log};
    case Command::Spectrum: return {1e-2 * w, 1e2 * w, 100, Spacing::Log};
    case Command::Wavefront: return {0.0, 1.0 / w, 101, Spacing::Linear};
    case Command::Green: {
      const double arrival = c.medium ? std::abs(c.x) / c.medium->c0() : 1.0;
      return {1e-3 * arrival, arrival, 50, Spacing::Log};
    }
    case Command::Verify: return {0.1 / w, 10.0 / w, 3, Spacing::Log};
    case Command::Figure: return {};
  }
  return {};
}

int default_threads() {
  const char* env = std::getenv("VISCOWAVE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 0) throw ConfigError("VISCOWAVE_THREADS must be a non-negative integer");
  return static_cast<int>(n);
}

}  // namespace

RunConfig config_from_json(Command command, const json& settings) {
  if (!settings.is_object()) throw ConfigError("settings must be a JSON object");
  RunConfig c;
  c.command = command;
  try {
    if (command == Command::Figure) {
      c.figure = text(settings, "figure", "");
      if (c.figure != "fig1" && c.figure != "fig2" && c.figure != "fig3" && c.figure != "fig4")
        throw ConfigError("unknown figure preset '" + c.figure + "' (expected fig1..fig4)");
    } else {
      c.medium = build_medium(settings.contains("model") ? settings.at("model") : json());
    }

    c.output = text(settings, "output", "-");
    const std::string path = text(settings, "path", "direct");
    if (path == "direct") c.path = PathChoice::Direct;
    else if (path == "spectral") c.path = PathChoice::Spectral;
    else if (path == "both") c.path = PathChoice::Both;
    else throw ConfigError("path must be direct, spectral or both");

    c.distance = number_or(settings, "distance", 0.0);
    c.x = number_or(settings, "x", 0.0);
    if (settings.contains("margin")) c.margin = number(settings, "margin");
    c.suite = text(settings, "suite", "all");
    if (c.suite != "all" && c.suite != "duality" && c.suite != "monotone" && c.suite != "mass" && c.suite != "paths")
      throw ConfigError("suite must be all, duality, monotone, mass or paths");

    c.threads = settings.contains("threads") ? static_cast<int>(number(settings, "threads")) : default_threads();
    if (c.threads < 0) throw ConfigError("threads must be >= 0");
    if (c.threads == 0) c.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    const std::string algorithm = text(settings, "algorithm", "dehoog");
    if (algorithm == "dehoog") c.inversion = numerics::InversionConfig::dehoog();
    else if (algorithm == "talbot") c.inversion = numerics::InversionConfig::talbot();
    else throw ConfigError("algorithm must be dehoog or talbot");

    if (command == Command::Wavefront && !(c.distance > 0.0)) throw ConfigError("wavefront needs --distance > 0");
    if (command == Command::Green && !(c.x != 0.0)) throw ConfigError("green needs a nonzero --x");

    c.grid = default_grid(c);
    if (settings.contains("grid")) {
      const json& g = settings.at("grid");
      if (!g.is_object()) throw ConfigError("grid must be an object");
      c.grid.min = number_or(g, "min", c.grid.min);
      c.grid.max = number_or(g, "max", c.grid.max);
      if (g.contains("points")) c.grid.points = static_cast<int>(number(g, "points"));
      const std::string spacing = text(g, "spacing", c.grid.spacing == Spacing::Log ? "log" : "linear");
      if (spacing == "log") c.grid.spacing = Spacing::Log;
      else if (spacing == "linear") c.grid.spacing = Spacing::Linear;
      else throw ConfigError("spacing must be log or linear");
    }
    if (command != Command::Figure) {
      const int min_points = command == Command::Verify ? 1 : 2;
      if (c.grid.points < min_points) throw ConfigError("grid needs more points");
      const bool zero_ok = command == Command::Wavefront && c.grid.spacing == Spacing::Linear;
      if (!(c.grid.min > 0.0 || (zero_ok && c.grid.min == 0.0))) throw ConfigError("grid min must be > 0");
      if (!(c.grid.max > c.grid.min) && !(c.grid.points == 1 && c.grid.max >= c.grid.min))
        throw ConfigError("grid needs min < max");
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  return c;
}

RunConfig parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Wave propagation in viscoelastic media with completely monotone creep"};
  app.require_subcommand(1);

  struct Flags {
    std::optional<std::string> model, spacing, output, path, suite, algorithm, config;
    std::optional<double> j0, m0, alpha, omega, j1, j2, rho, c0, min, max, distance, x, margin;
    std::optional<int> points, threads;
    std::string figure;
  } f;

  for (Command command : kCommands) {
    CLI::App* sub = app.add_subcommand(to_string(command));
    sub->add_option("--config", f.config, "JSON settings file; overrides flags");
    sub->add_option("--output", f.output, "output CSV path, '-' for stdout");
    sub->add_option("--threads", f.threads, "evaluation threads (0 = all cores)");
    if (command == Command::Figure) {
      sub->add_option("name", f.figure, "preset: fig1, fig2, fig3 or fig4")->required();
      continue;
    }
    sub->add_option("--model", f.model, "strick-mainardi|strick|becker|jls|lomnitz|andrade");
    sub->add_option("--j0", f.j0, "instantaneous compliance J0 [1/Pa]");
    sub->add_option("--m0", f.m0, "compliance scale M0 [1/Pa]");
    sub->add_option("--alpha", f.alpha, "exponent alpha");
    sub->add_option("--omega", f.omega, "rate Omega [1/s]");
    sub->add_option("--j1", f.j1, "Andrade J1 [1/(Pa s)]");
    sub->add_option("--j2", f.j2, "Andrade J2 [1/(Pa s^alpha)]");
    sub->add_option("--rho", f.rho, "density [kg/m^3]");
    sub->add_option("--c0", f.c0, "front speed [m/s]; sets rho = 1/(c0^2 J0)");
    sub->add_option("--min,--fmin,--tmin,--rmin", f.min, "grid minimum");
    sub->add_option("--max,--fmax,--tmax,--rmax", f.max, "grid maximum");
    sub->add_option("--points", f.points, "grid points");
    sub->add_option("--spacing", f.spacing, "log or linear");
    sub->add_option("--algorithm", f.algorithm, "inverse Laplace method: dehoog or talbot");
    if (command == Command::Response) sub->add_option("--path", f.path, "direct, spectral or both");
    if (command == Command::Wavefront) sub->add_option("--distance", f.distance, "distance r [m]");
    if (command == Command::Green) {
      sub->add_option("--x", f.x, "receiver position [m]");
      sub->add_option("--margin", f.margin, "minimum time behind the front for Bromwich inversion [s]");
    }
    if (command == Command::Verify) sub->add_option("--suite", f.suite, "all, duality, monotone, mass or paths");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    throw EarlyExit{0};
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    throw EarlyExit{0};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  Command command = Command::Creep;
  for (Command c : kCommands)
    if (app.got_subcommand(to_string(c))) command = c;

  json settings = json::object();
  json model = json::object();
  auto put = [](json& j, const char* key, const auto& v) {
    if (v) j[key] = *v;
  };
  put(model, "family", f.model);
  put(model, "j0", f.j0);
  put(model, "m0", f.m0);
  put(model, "alpha", f.alpha);
  put(model, "omega", f.omega);
  put(model, "j1", f.j1);
  put(model, "j2", f.j2);
  put(model, "rho", f.rho);
  put(model, "c0", f.c0);
  if (!model.empty()) settings["model"] = model;
  json grid = json::object();
  put(grid, "min", f.min);
  put(grid, "max", f.max);
  put(grid, "points", f.points);
  put(grid, "spacing", f.spacing);
  if (!grid.empty()) settings["grid"] = grid;
  put(settings, "output", f.output);
  put(settings, "path", f.path);
  put(settings, "distance", f.distance);
  put(settings, "x", f.x);
  put(settings, "margin", f.margin);
  put(settings, "suite", f.suite);
  put(settings, "threads", f.threads);
  put(settings, "algorithm", f.algorithm);
  if (command == Command::Figure) settings["figure"] = f.figure;

  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw ConfigError("cannot read config file '" + *f.config + "'");
    json overlay;
    try {
      overlay = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config file '" + *f.config + "': " + e.what());
    }
    if (!overlay.is_object()) throw ConfigError("config file must hold a JSON object");
    settings.merge_patch(overlay);
  }
  return config_from_json(command, settings);
}

}  // namespace viscowave::cli
