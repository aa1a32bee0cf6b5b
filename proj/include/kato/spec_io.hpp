#pragma once

#include "kato/density_model.hpp"
#include "kato/errors.hpp"

#include "json.hpp"

#include <string>

namespace kato {

/// Malformed density spec. `field()` names the offending JSON path, e.g. "terms[2].exponent".
class SpecError : public Error {
 public:
  SpecError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct DensitySpec {
  DensityModel model;
  /// Constant added to the Coulomb potential of the declared frame.
  double potential_offset = 0.0;
};

/// Schema:
///   {
///     "electron_count": int,
///     "frame": [{"position": [x, y, z], "charge": Z}, ...],       (optional)
///     "terms": [{"kind": "slater_s" | "gaussian", "center": [x, y, z],
///                "coefficient": c, "exponent": e, "power": n}, ...], (power optional, 0)
///     "normalize": bool,                                            (optional, false)
///     "potential_offset": c                                         (optional, 0)
///   }
DensitySpec parse_density_spec(const nlohmann::json& doc);
DensitySpec parse_density_spec_text(const std::string& text);
DensitySpec load_density_spec(const std::string& path);

nlohmann::json to_json(const DensityModel& model, double potential_offset = 0.0);

}  // namespace kato
