#include "kato/kato_inversion.hpp"

#include "kato/errors.hpp"
#include "kato/lebedev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace kato {
namespace {

std::string skip_reason(const CriticalPoint& cp) {
  std::ostringstream os;
  if (cp.is_maximum()) {
    os << "smooth (non-nuclear) maximum: vanishing radial slope, not a cusp";
  } else {
    os << "smooth critical point of rank " << cp.rank;
    if (cp.signature) os << " and signature " << *cp.signature;
    os << ", not a maximum";
  }
  return os.str();
}

ReconstructionReport reconstruct_from_points(const DensityModel& model,
                                             const std::vector<CriticalPoint>& points,
                                             const InversionOptions& options) {
  ReconstructionReport report;
  std::vector<Nucleus> nuclei;
  std::vector<CriticalPoint> smooth;
  for (const auto& cp : points) {
    if (cp.kind != CriticalKind::CuspMaximum) {
      report.skipped_points.push_back({cp, skip_reason(cp)});
      smooth.push_back(cp);
      continue;
    }
    const double raw = -0.5 * cp.log_derivative;
    double z = raw;
    if (options.snap_charges) {
      z = std::max(1.0, std::round(raw));
      report.snap_distances.push_back(std::abs(z - raw));
    }
    report.raw_charges.push_back(raw);
    report.cusp_points.push_back(cp);
    nuclei.push_back({cp.position, z});
  }
  if (nuclei.empty()) {
    throw NoCuspsFound("density has no cusp maxima; a Coulombic potential cannot be reconstructed",
                       std::move(smooth));
  }
  report.estimated_frame = NuclearFrame(std::move(nuclei));
  report.potential = CoulombPotential(report.estimated_frame);
  if (model.frame()) {
    report.match = match_frames(*model.frame(), report.estimated_frame, options.match_gate);
  }
  return report;
}

ModelReconstruction reconstruct_quietly(const DensityModel& model, const SearchBox& box,
                                        const InversionOptions& options) {
  ModelReconstruction out;
  std::vector<CriticalPoint> points;
  try {
    points = find_critical_points(model, box, options.topology);
  } catch (const EmptyResult& e) {
    out.error = e.what();
    return out;
  }
  for (const auto& cp : points) {
    if (cp.is_maximum()) out.maxima.push_back(cp);
  }
  try {
    out.report = reconstruct_from_points(model, points, options);
  } catch (const NoCuspsFound& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

double FrameMatch::max_position_error() const {
  double m = 0.0;
  for (const auto& c : matched) m = std::max(m, c.position_error);
  return m;
}

double FrameMatch::max_charge_error() const {
  double m = 0.0;
  for (const auto& c : matched) m = std::max(m, std::abs(c.charge_error));
  return m;
}

bool CuspVerification::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CuspCheck& c) { return c.passed; });
}

std::string to_string(HkCase c) {
  switch (c) {
    case HkCase::I:
      return "I";
    case HkCase::II:
      return "II";
    case HkCase::III:
      return "III";
    case HkCase::IV:
      return "IV";
  }
  return "?";
}

FrameMatch match_frames(const NuclearFrame& truth, const NuclearFrame& estimate, double gate) {
  // Greedy on globally sorted pair distances; deterministic for ties by index order.
  struct Pair {
    double distance;
    std::size_t t;
    std::size_t e;
  };
  std::vector<Pair> pairs;
  for (std::size_t t = 0; t < truth.size(); ++t) {
    for (std::size_t e = 0; e < estimate.size(); ++e) {
      const double d = (truth[t].position - estimate[e].position).norm();
      if (d <= gate) pairs.push_back({d, t, e});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.distance < b.distance; });
  std::vector<bool> truth_used(truth.size(), false);
  std::vector<bool> est_used(estimate.size(), false);
  FrameMatch match;
  for (const auto& p : pairs) {
    if (truth_used[p.t] || est_used[p.e]) continue;
    truth_used[p.t] = est_used[p.e] = true;
    match.matched.push_back({p.t, p.e, p.distance, estimate[p.e].charge - truth[p.t].charge});
  }
  std::sort(match.matched.begin(), match.matched.end(),
            [](const CenterMatch& a, const CenterMatch& b) { return a.truth_index < b.truth_index; });
  for (std::size_t t = 0; t < truth.size(); ++t) {
    if (!truth_used[t]) match.missing.push_back(t);
  }
  for (std::size_t e = 0; e < estimate.size(); ++e) {
    if (!est_used[e]) match.spurious.push_back(e);
  }
  return match;
}

ReconstructionReport reconstruct_potential(const DensityModel& model, const SearchBox& box,
                                           const InversionOptions& options) {
  const auto points = find_critical_points(model, box, options.topology);
  return reconstruct_from_points(model, points, options);
}

CuspVerification verify_cusp_conditions(const DensityModel& model, const NuclearFrame& frame,
                                        double tolerance, const RadialDerivativeOptions& radial) {
  if (frame.empty()) throw Error("verify_cusp_conditions: frame is empty");
  CuspVerification out;
  out.tolerance = tolerance;
  for (const auto& nucleus : frame.centers()) {
    CuspCheck check;
    check.center = nucleus.position;
    check.charge = nucleus.charge;
    const double rho = evaluate(model, nucleus.position);
    check.rhs = -2.0 * nucleus.charge * rho;
    try {
      const auto est = radial_derivative_at_center(model, nucleus.position, radial);
      check.lhs = est.derivative;
      check.converged = est.converged;
    } catch (const ZeroCenterValue&) {
      check.lhs = 0.0;
      check.converged = false;
    }
    check.residual = std::abs(check.lhs - check.rhs);
    check.passed = check.residual <= tolerance * std::max(1.0, std::abs(check.rhs));
    out.checks.push_back(check);
  }
  return out;
}

std::vector<Vec3> probe_grid(const std::vector<Vec3>& centers, int lebedev_order) {
  const auto& grid = lebedev_grid(lebedev_order);
  std::vector<Vec3> out;
  for (const auto& c : centers) {
    out.push_back(c);
    for (double r : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      for (const auto& p : grid) out.push_back(c + r * p.direction);
    }
  }
  return out;
}

IncompatibilityVerdict incompatibility_check(const DensityModel& first, const DensityModel& second,
                                             const SearchBox& box, double tolerance,
                                             const IncompatibilityOptions& options) {
  IncompatibilityVerdict v;
  v.first = reconstruct_quietly(first, box, options.inversion);
  v.second = reconstruct_quietly(second, box, options.inversion);

  std::vector<Vec3> centers;
  for (const auto* rec : {&v.first, &v.second}) {
    for (const auto& m : rec->maxima) centers.push_back(m.position);
  }
  if (centers.empty()) {
    for (const auto* model : {&first, &second}) {
      for (const auto& t : model->terms()) centers.push_back(t.center);
    }
  }
  const auto probes = probe_grid(centers, options.probe_lebedev_order);
  v.probe_count = probes.size();
  double diff = 0.0;
  for (const auto& p : probes) diff = std::max(diff, std::abs(evaluate(first, p) - evaluate(second, p)));
  v.density_difference = diff;
  v.densities_equal = diff <= tolerance;

  if (v.first.report && v.second.report) {
    const auto m = match_frames(v.first.report->estimated_frame,
                                v.second.report->estimated_frame, options.inversion.match_gate);
    v.potentials_identical = m.complete() && m.max_position_error() <= options.position_tol &&
                             m.max_charge_error() <= options.charge_tol;
  }

  if (v.densities_equal) {
    v.case_label = HkCase::IV;
    if (v.potentials_identical.value_or(false)) {
      v.statement =
          "identical densities reconstruct to identical Coulomb potentials: the hypothesis "
          "v1 != v2 + const cannot hold together with rho1 = rho2 (the cusps fix the potential)";
    } else if (v.potentials_identical) {
      v.statement =
          "densities agree on the probe grid but reconstructed potentials differ beyond "
          "tolerance; probe grid or tolerances are too coarse to decide";
    } else {
      v.statement = "densities agree on the probe grid but carry no cusps; no Coulombic "
                    "potential can be reconstructed";
    }
  } else {
    v.case_label = HkCase::II;
    std::ostringstream os;
    os << "densities differ (max |rho1 - rho2| = " << diff
       << " on the probe grid): consistent with different potentials giving different densities";
    if (v.potentials_identical) {
      os << (*v.potentials_identical ? "; reconstructed frames nevertheless coincide"
                                     : "; reconstructed frames differ");
    }
    if (!v.first.error.empty()) os << "; first model: " << v.first.error;
    if (!v.second.error.empty()) os << "; second model: " << v.second.error;
    v.statement = os.str();
  }
  return v;
}

}  // namespace kato
