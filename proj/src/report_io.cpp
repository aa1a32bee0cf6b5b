#include "kato/report_io.hpp"

#include <cstdint>
#include <cstdio>

namespace kato {

using nlohmann::json;

json to_json(const Vec3& v) { return json::array({v.x(), v.y(), v.z()}); }

json to_json(const NuclearFrame& frame) {
  json out = json::array();
  for (const auto& c : frame.centers()) {
    out.push_back({{"position", to_json(c.position)}, {"charge", c.charge}});
  }
  return out;
}

NuclearFrame frame_from_json(const json& doc) {
  std::vector<Nucleus> nuclei;
  for (const auto& entry : doc) {
    const auto& p = entry.at("position");
    nuclei.push_back({Vec3(p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()),
                      entry.at("charge").get<double>()});
  }
  return NuclearFrame(std::move(nuclei));
}

json to_json(const CriticalPoint& cp) {
  json out{{"position", to_json(cp.position)},
           {"kind", to_string(cp.kind)},
           {"rank", cp.rank},
           {"signature", cp.signature ? json(*cp.signature) : json(nullptr)},
           {"density", cp.density_value},
           {"gradient_norm", cp.gradient_norm ? json(*cp.gradient_norm) : json(nullptr)},
           {"gradient_norm_floor", cp.gradient_norm_floor},
           {"log_derivative", cp.log_derivative_defined ? json(cp.log_derivative) : json(nullptr)}};
  if (cp.kind == CriticalKind::SmoothCritical) {
    out["hessian_eigenvalues"] = to_json(Vec3(cp.hessian_eigenvalues));
  }
  return out;
}

json to_json(const FrameMatch& match) {
  json matched = json::array();
  for (const auto& m : match.matched) {
    matched.push_back({{"truth_index", m.truth_index},
                       {"estimate_index", m.estimate_index},
                       {"position_error", m.position_error},
                       {"charge_error", m.charge_error}});
  }
  return {{"matched", matched},
          {"missing", match.missing},
          {"spurious", match.spurious},
          {"max_position_error", match.max_position_error()},
          {"max_charge_error", match.max_charge_error()}};
}

json to_json(const ReconstructionReport& report) {
  json cusps = json::array();
  for (const auto& cp : report.cusp_points) cusps.push_back(to_json(cp));
  json skipped = json::array();
  for (const auto& s : report.skipped_points) {
    skipped.push_back({{"point", to_json(s.point)}, {"reason", s.reason}});
  }
  json out{{"estimated_frame", to_json(report.estimated_frame)},
           {"raw_charges", report.raw_charges},
           {"cusp_points", cusps},
           {"skipped_points", skipped},
           {"potential", {{"form", "v(r) = offset - sum_a Z_a / |r - R_a|"},
                          {"offset", report.potential.offset()}}}};
  if (!report.snap_distances.empty()) out["snap_distances"] = report.snap_distances;
  out["match"] = report.match ? to_json(*report.match) : json(nullptr);
  return out;
}

json to_json(const CuspVerification& verification) {
  json checks = json::array();
  for (const auto& c : verification.checks) {
    checks.push_back({{"center", to_json(c.center)},
                      {"charge", c.charge},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"residual", c.residual},
                      {"converged", c.converged},
                      {"passed", c.passed}});
  }
  return {{"tolerance", verification.tolerance},
          {"checks", checks},
          {"all_passed", verification.all_passed()}};
}

namespace {

json to_json(const ModelReconstruction& rec) {
  json maxima = json::array();
  for (const auto& m : rec.maxima) maxima.push_back(kato::to_json(m));
  return {{"report", rec.report ? kato::to_json(*rec.report) : json(nullptr)},
          {"error", rec.error.empty() ? json(nullptr) : json(rec.error)},
          {"maxima", maxima}};
}

}  // namespace

json to_json(const IncompatibilityVerdict& verdict) {
  return {{"density_difference", verdict.density_difference},
          {"probe_count", verdict.probe_count},
          {"densities_equal", verdict.densities_equal},
          {"potentials_identical", verdict.potentials_identical
                                       ? json(*verdict.potentials_identical)
                                       : json(nullptr)},
          {"case", to_string(verdict.case_label)},
          {"statement", verdict.statement},
          {"first", to_json(verdict.first)},
          {"second", to_json(verdict.second)}};
}

json to_json(const HKAuditReport& r) {
  json out{{"E1", r.e1},
           {"E2", r.e2},
           {"cross12", r.cross12},
           {"cross21", r.cross21},
           {"diff_integral_rho2", r.diff_integral_rho2},
           {"diff_integral_rho1", r.diff_integral_rho1},
           {"identity_residual_12", r.identity_residual_12},
           {"identity_residual_21", r.identity_residual_21},
           {"inequality_sum_gap", r.inequality_sum_gap},
           {"ground_energy_gap", r.ground_energy_gap},
           {"strict1", r.strict1},
           {"strict2", r.strict2},
           {"wavefunctions_equal", r.wavefunctions_equal},
           {"densities_equal", r.densities_equal},
           {"potentials_differ_beyond_constant", r.potentials_differ_beyond_constant},
           {"wavefunction_difference", r.wavefunction_difference},
           {"density_difference", r.density_difference},
           {"case", to_string(r.case_label)},
           {"case_note", r.case_note}};
  out["kato_check"] = r.kato_check ? to_json(*r.kato_check) : json(nullptr);
  return out;
}

json to_json(const LocalScalingMap& map) {
  json rows = json::array();
  double max_q = 0.0;
  for (std::size_t i = 0; i < map.radii.size(); ++i) {
    rows.push_back({map.radii[i], map.values[i], map.derivatives[i], map.q_residuals[i]});
    max_q = std::max(max_q, map.q_residuals[i]);
  }
  return {{"columns", {"r", "f", "df_dr", "q_residual"}},
          {"rows", rows},
          {"electron_count", map.source().electron_count()},
          {"max_q_residual", max_q},
          {"jacobian_residual", map.jacobian_residual}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace kato
