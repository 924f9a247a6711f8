#include "viscowave/models_json.hpp"

#include "viscowave/error.hpp"

namespace viscowave {

namespace {

double field(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) fail(ErrorKind::Configuration, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

double required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::Configuration, std::string("missing field '") + key + "'");
  return field(j, key, 0.0);
}

}  // namespace

Family parse_family(const std::string& name, bool* zero_alpha) {
  if (zero_alpha) *zero_alpha = false;
  if (name == "strick-mainardi" || name == "strick") return Family::StrickMainardi;
  if (name == "becker") {
    if (zero_alpha) *zero_alpha = true;
    return Family::StrickMainardi;
  }
  if (name == "jls") return Family::JeffreysLomnitzStrick;
  if (name == "lomnitz") {
    if (zero_alpha) *zero_alpha = true;
    return Family::JeffreysLomnitzStrick;
  }
  if (name == "andrade") return Family::Andrade;
  fail(ErrorKind::Configuration, "unknown model family '" + name + "'");
}

nlohmann::json model_to_json(const CreepModel& model) {
  nlohmann::json j;
  j["family"] = to_string(model.family());
  switch (model.family()) {
    case Family::StrickMainardi: {
      const auto& p = model.as<StrickMainardi>();
      j["j0"] = p.j0;
      j["m0"] = p.m0;
      j["alpha"] = p.alpha;
      j["omega"] = p.omega;
      break;
    }
    case Family::JeffreysLomnitzStrick: {
      const auto& p = model.as<JeffreysLomnitzStrick>();
      j["j0"] = p.j0;
      j["m0"] = p.m0;
      j["alpha"] = p.alpha;
      j["omega"] = p.omega;
      break;
    }
    case Family::Andrade: {
      const auto& p = model.as<Andrade>();
      j["j0"] = p.j0;
      j["j1"] = p.j1;
      j["j2"] = p.j2;
      j["alpha"] = p.alpha;
      break;
    }
  }
  return j;
}

CreepModel model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::Configuration, "model must be a JSON object");
  if (!j.contains("family") || !j.at("family").is_string())
    fail(ErrorKind::Configuration, "model needs a string field 'family'");
  bool zero_alpha = false;
  const Family family = parse_family(j.at("family").get<std::string>(), &zero_alpha);
  try {
    switch (family) {
      case Family::StrickMainardi:
        return CreepModel::strick_mainardi(required(j, "j0"), required(j, "m0"),
                                           zero_alpha ? 0.0 : required(j, "alpha"), field(j, "omega", 1.0));
      case Family::JeffreysLomnitzStrick:
        // A missing alpha selects the logarithmic (Lomnitz) law.
        return CreepModel::jls(required(j, "j0"), required(j, "m0"), zero_alpha ? 0.0 : field(j, "alpha", 0.0),
                               field(j, "omega", 1.0));
      case Family::Andrade:
        return CreepModel::andrade(required(j, "j0"), field(j, "j1", 0.0), field(j, "j2", 0.0),
                                   required(j, "alpha"));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Configuration) throw;
    fail(ErrorKind::Configuration, e.what());
  }
  fail(ErrorKind::Configuration, "unreachable model family");
}

nlohmann::json medium_to_json(const MediumSpec& medium) {
  nlohmann::json j = model_to_json(medium.model());
  j["rho"] = medium.rho();
  return j;
}

MediumSpec medium_from_json(const nlohmann::json& j) {
  CreepModel model = model_from_json(j);
  const double rho = required(j, "rho");
  try {
    return MediumSpec(std::move(model), rho);
  } catch (const Error& e) {
    fail(ErrorKind::Configuration, e.what());
  }
}

}  // namespace viscowave
