#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "viscowave/models.hpp"
#include "viscowave/numerics.hpp"
#include "viscowave/response.hpp"

namespace viscowave::cli {

enum class Command { Creep, Response, Spectrum, Wavefront, Green, Verify, Figure };
enum class PathChoice { Direct, Spectral, Both };

const char* to_string(Command command) noexcept;

/// Thrown for malformed command lines and configs; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when parsing ends early without an error (--help).
struct EarlyExit {
  int status;
};

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  Spacing spacing = Spacing::Log;
};

struct RunConfig {
  Command command = Command::Creep;
  std::optional<MediumSpec> medium;  // absent for figure presets
  GridSpec grid;
  std::string output = "-";  // "-" is standard output
  PathChoice path = PathChoice::Direct;
  double distance = 0.0;       // wavefront, m
  double x = 0.0;              // green, m
  std::optional<double> margin;
  std::string suite = "all";   // verify
  std::string figure;          // figure preset name
  int threads = 1;
  numerics::InversionConfig inversion = numerics::InversionConfig::dehoog();
};

/// The settings tree that flags produce and --config files overlay:
/// {"model": {family, j0, m0, alpha, omega, j1, j2, rho, c0},
///  "grid": {min, max, points, spacing}, "output", "path", "distance", "x",
///  "margin", "suite", "figure", "threads", "algorithm"}.
RunConfig config_from_json(Command command, const nlohmann::json& settings);

/// Parses argv. Flags are collected into a settings tree, the --config file
/// (if any) is merged over it, and the result is validated.
RunConfig parse_command_line(int argc, const char* const* argv);

}  // namespace viscowave::cli
