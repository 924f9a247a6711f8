#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "viscowave/models.hpp"

namespace viscowave {

/// {"family": "strick-mainardi" | "jls" | "andrade", "j0", "m0", "alpha",
///  "omega", "j1", "j2"} in SI units. Fields a family does not use are
/// omitted on output and ignored on input. JLS defaults to alpha = 0.
nlohmann::json model_to_json(const CreepModel& model);
CreepModel model_from_json(const nlohmann::json& j);

/// The model object with an added "rho" field.
nlohmann::json medium_to_json(const MediumSpec& medium);
MediumSpec medium_from_json(const nlohmann::json& j);

/// Accepts the canonical family names plus the aliases "strick", "becker"
/// (Strick-Mainardi with alpha = 0) and "lomnitz" (JLS with alpha = 0).
Family parse_family(const std::string& name, bool* zero_alpha = nullptr);

}  // namespace viscowave
