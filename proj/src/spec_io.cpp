#include "kato/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace kato {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SpecError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

double finite_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw SpecError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw SpecError(path, "value is not finite");
  return x;
}

Vec3 vector3(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) throw SpecError(path, "expected an array of 3 numbers");
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = finite_number(v[i], path + "[" + std::to_string(i) + "]");
  return out;
}

std::string join(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

}  // namespace

DensitySpec parse_density_spec(const json& doc) {
  if (!doc.is_object()) throw SpecError("", "spec must be a JSON object");

  const auto& count = require(doc, "electron_count", "");
  if (!count.is_number_integer()) throw SpecError("electron_count", "expected an integer");
  const auto n = count.get<long long>();
  if (n < 0 || n > std::numeric_limits<int>::max()) {
    throw SpecError("electron_count", "must be a nonnegative integer");
  }

  std::optional<NuclearFrame> frame;
  if (auto it = doc.find("frame"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw SpecError("frame", "expected an array");
    std::vector<Nucleus> nuclei;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "frame[" + std::to_string(i) + "]";
      const auto& entry = (*it)[i];
      Nucleus nucleus;
      nucleus.position = vector3(require(entry, "position", path), join(path, "position"));
      nucleus.charge = finite_number(require(entry, "charge", path), join(path, "charge"));
      if (!(nucleus.charge > 0.0)) throw SpecError(join(path, "charge"), "must be positive");
      nuclei.push_back(nucleus);
    }
    try {
      frame = NuclearFrame(std::move(nuclei));
    } catch (const InvalidModel& e) {
      throw SpecError("frame", e.what());
    }
  }

  const auto& terms_json = require(doc, "terms", "");
  if (!terms_json.is_array()) throw SpecError("terms", "expected an array");
  std::vector<DensityTerm> terms;
  for (std::size_t i = 0; i < terms_json.size(); ++i) {
    const std::string path = "terms[" + std::to_string(i) + "]";
    const auto& entry = terms_json[i];
    DensityTerm term;
    const auto& kind = require(entry, "kind", path);
    if (!kind.is_string()) throw SpecError(join(path, "kind"), "expected a string");
    const auto k = kind.get<std::string>();
    if (k == "slater_s") {
      term.primitive.kind = PrimitiveKind::SlaterS;
    } else if (k == "gaussian") {
      term.primitive.kind = PrimitiveKind::Gaussian;
    } else {
      throw SpecError(join(path, "kind"), "unknown kind '" + k + "' (slater_s | gaussian)");
    }
    term.center = vector3(require(entry, "center", path), join(path, "center"));
    term.primitive.coefficient =
        finite_number(require(entry, "coefficient", path), join(path, "coefficient"));
    if (term.primitive.coefficient < 0.0) {
      throw SpecError(join(path, "coefficient"), "must be nonnegative");
    }
    term.primitive.exponent =
        finite_number(require(entry, "exponent", path), join(path, "exponent"));
    if (!(term.primitive.exponent > 0.0)) throw SpecError(join(path, "exponent"), "must be positive");
    if (auto p = entry.find("power"); p != entry.end()) {
      if (!p->is_number_integer() || p->get<long long>() < 0 || p->get<long long>() > 24) {
        throw SpecError(join(path, "power"), "expected an integer in [0, 24]");
      }
      term.primitive.power = p->get<int>();
    }
    terms.push_back(term);
  }

  DensitySpec spec;
  try {
    spec.model = DensityModel(std::move(terms), static_cast<int>(n), std::move(frame));
  } catch (const InvalidModel& e) {
    throw SpecError("terms", e.what());
  }

  if (auto it = doc.find("normalize"); it != doc.end()) {
    if (!it->is_boolean()) throw SpecError("normalize", "expected a boolean");
    if (it->get<bool>()) {
      try {
        spec.model = normalize(spec.model, static_cast<int>(n));
      } catch (const ZeroDensity& e) {
        throw SpecError("normalize", e.what());
      }
    }
  }
  if (auto it = doc.find("potential_offset"); it != doc.end()) {
    spec.potential_offset = finite_number(*it, "potential_offset");
  }
  return spec;
}

DensitySpec parse_density_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_density_spec(doc);
}

DensitySpec load_density_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("", "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_density_spec_text(buf.str());
}

json to_json(const DensityModel& model, double potential_offset) {
  json doc;
  doc["electron_count"] = model.electron_count();
  if (model.frame()) {
    json frame = json::array();
    for (const auto& c : model.frame()->centers()) {
      frame.push_back({{"position", {c.position.x(), c.position.y(), c.position.z()}},
                       {"charge", c.charge}});
    }
    doc["frame"] = frame;
  }
  json terms = json::array();
  for (const auto& t : model.terms()) {
    terms.push_back(
        {{"kind", t.primitive.kind == PrimitiveKind::SlaterS ? "slater_s" : "gaussian"},
         {"center", {t.center.x(), t.center.y(), t.center.z()}},
         {"coefficient", t.primitive.coefficient},
         {"exponent", t.primitive.exponent},
         {"power", t.primitive.power}});
  }
  doc["terms"] = terms;
  doc["normalize"] = false;
  if (potential_offset != 0.0) doc["potential_offset"] = potential_offset;
  return doc;
}

}  // namespace kato
