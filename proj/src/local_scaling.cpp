#include "kato/local_scaling.hpp"

#include "kato/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace kato {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kMassTolerance = 1e-10;

// Solves Q_t(f) = q (lower branch) or N_t - Q_t(f) = c (upper branch), whichever
// of q, c is smaller, so the matched quantity never suffers cancellation.
double match_radius(const RadialDensity& source, const RadialDensity& target, double r) {
  if (r <= 0.0) return 0.0;
  const double q = source.cumulative(r);
  const double c = source.complement(r);
  const bool lower = q <= c;
  const double goal = lower ? q : c;
  if (!(goal > 0.0)) {
    std::ostringstream os;
    os << "source cumulative is degenerate at r = " << r;
    throw NonMonotoneCumulative(os.str());
  }
  // residual > 0 means f is too large
  auto residual = [&](double f) {
    return lower ? std::log(target.cumulative(f)) - std::log(goal)
                 : std::log(goal) - std::log(target.complement(f));
  };

  double lo = 0.0;
  double hi = r;
  while (residual(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) throw NonMonotoneCumulative("target cumulative never reaches the source value");
  }
  double f = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double g = residual(f);
    if (g > 0.0) {
      hi = f;
    } else {
      lo = f;
    }
    const double rho = target.value(f);
    const double flux = kFourPi * f * f * rho;
    const double slope = lower ? flux / target.cumulative(f) : flux / target.complement(f);
    double next = (slope > 0.0 && std::isfinite(slope)) ? f - g / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - f);
    f = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * f || hi - lo <= 1e-300) break;
  }
  if (!(target.value(f) > 0.0)) {
    std::ostringstream os;
    os << "target cumulative is flat near f = " << f;
    throw NonMonotoneCumulative(os.str());
  }
  return f;
}

}  // namespace

RadialDensity::RadialDensity(std::vector<RadialPrimitive> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) total_ += t.integral();
}

RadialDensity RadialDensity::from_model(const DensityModel& model) {
  if (!model.is_concentric()) {
    throw InvalidModel("radial density requires every term to share a single center");
  }
  std::vector<RadialPrimitive> prims;
  for (const auto& t : model.terms()) prims.push_back(t.primitive);
  return RadialDensity(std::move(prims));
}

double RadialDensity::value(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.value(r);
  return s;
}

double RadialDensity::cumulative(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.cumulative(r);
  return s;
}

double RadialDensity::complement(double r) const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.cumulative_complement(r);
  return s;
}

LocalScalingMap::LocalScalingMap(RadialDensity source, RadialDensity target)
    : source_(std::move(source)), target_(std::move(target)) {}

double LocalScalingMap::operator()(double r) const { return match_radius(source_, target_, r); }

double LocalScalingMap::derivative(double r) const {
  const double f = (*this)(r);
  return r * r * source_.value(r) / (f * f * target_.value(f));
}

std::vector<double> ScalingGrid::radii() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) throw Error("invalid scaling grid");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double span = std::log(r_max / r_min);
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = r_min * std::exp(span * i / (points - 1));
  }
  out.back() = r_max;
  return out;
}

LocalScalingMap solve_scaling_map(const RadialDensity& source, const RadialDensity& target,
                                  const std::vector<double>& radii) {
  const double ns = source.electron_count();
  const double nt = target.electron_count();
  if (std::abs(ns - nt) > kMassTolerance * std::max(1.0, std::max(ns, nt))) {
    std::ostringstream os;
    os << "source and target electron counts differ: " << ns << " vs " << nt;
    throw MassMismatch(os.str());
  }
  LocalScalingMap map(source, target);
  map.radii = radii;
  for (double r : radii) {
    if (!(r > 0.0)) throw Error("scaling grid radii must be positive");
    const double f = map(r);
    const double fp = r * r * source.value(r) / (f * f * target.value(f));
    map.values.push_back(f);
    map.derivatives.push_back(fp);
    map.q_residuals.push_back(std::abs(target.cumulative(f) - source.cumulative(r)));

    const double h = 1e-5 * r;
    const double fd = (map(r + h) - map(r - h)) / (2.0 * h);
    const double lhs = target.value(f) * f * f * fd;
    const double rhs = r * r * source.value(r);
    if (rhs > 0.0) map.jacobian_residual = std::max(map.jacobian_residual, std::abs(lhs - rhs) / rhs);
  }
  return map;
}

LocalScalingMap solve_scaling_map(const RadialDensity& source, const RadialDensity& target,
                                  const ScalingGrid& grid) {
  return solve_scaling_map(source, target, grid.radii());
}

TransformedWavefunction transform_wavefunction(const std::function<double(double)>& psi,
                                               const LocalScalingMap& map) {
  TransformedWavefunction out;
  out.radii = map.radii;
  for (std::size_t i = 0; i < map.radii.size(); ++i) {
    const double r = map.radii[i];
    const double f = map.values[i];
    const double jac = f * f * map.derivatives[i] / (r * r);
    out.values.push_back(std::sqrt(jac) * psi(f));
  }
  return out;
}

}  // namespace kato
