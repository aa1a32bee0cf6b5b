#include "kato/density_model.hpp"

#include "kato/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace kato {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kSingularRadius = 1e-12;
constexpr int kMaxPower = 24;

// mult * r^k, where k may be negative; a zero multiplier wins over r^k -> inf.
double scaled_power(double mult, double r, int k) {
  if (mult == 0.0) return 0.0;
  if (k >= 0) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= r;
    return mult * p;
  }
  double p = 1.0;
  for (int i = 0; i < -k; ++i) p *= r;
  return mult / p;
}

double decay(const RadialPrimitive& p, double r) {
  return p.kind == PrimitiveKind::SlaterS ? std::exp(-2.0 * p.exponent * r)
                                          : std::exp(-p.exponent * r * r);
}

// Shape parameter a and scale s of the radial moment: int r^{n+2} f = c Gamma(a) / s.
struct MomentShape {
  double a;
  double s;
  double x(const RadialPrimitive& p, double r) const {
    return p.kind == PrimitiveKind::SlaterS ? 2.0 * p.exponent * r : p.exponent * r * r;
  }
};

MomentShape moment_shape(const RadialPrimitive& p) {
  const double n = p.power;
  if (p.kind == PrimitiveKind::SlaterS) {
    return {n + 3.0, std::pow(2.0 * p.exponent, n + 3.0)};
  }
  return {(n + 3.0) / 2.0, 2.0 * std::pow(p.exponent, (n + 3.0) / 2.0)};
}

void validate(const DensityTerm& t, std::size_t index) {
  const auto where = "term " + std::to_string(index) + ": ";
  const auto& p = t.primitive;
  if (!t.center.allFinite()) throw InvalidModel(where + "non-finite center");
  if (!(p.coefficient >= 0.0) || !std::isfinite(p.coefficient)) {
    throw InvalidModel(where + "coefficient must be nonnegative and finite");
  }
  if (!(p.exponent > 0.0) || !std::isfinite(p.exponent)) {
    throw InvalidModel(where + "exponent must be positive and finite");
  }
  if (p.power < 0 || p.power > kMaxPower) {
    throw InvalidModel(where + "power must lie in [0, " + std::to_string(kMaxPower) + "]");
  }
}

}  // namespace

double RadialPrimitive::value(double r) const {
  const double e = decay(*this, r);
  if (e == 0.0) return 0.0;  // r^n may overflow where the exponential has underflowed
  return scaled_power(coefficient, r, power) * e;
}

double RadialPrimitive::first_derivative(double r) const {
  const double n = power;
  const double e = decay(*this, r);
  if (e == 0.0) return 0.0;
  if (kind == PrimitiveKind::SlaterS) {
    const double b = 2.0 * exponent;
    return coefficient * e * (scaled_power(n, r, power - 1) - scaled_power(b, r, power));
  }
  return coefficient * e *
         (scaled_power(n, r, power - 1) - scaled_power(2.0 * exponent, r, power + 1));
}

double RadialPrimitive::second_derivative(double r) const {
  const double n = power;
  const double e = decay(*this, r);
  if (e == 0.0) return 0.0;
  if (kind == PrimitiveKind::SlaterS) {
    const double b = 2.0 * exponent;
    return coefficient * e *
           (scaled_power(n * (n - 1.0), r, power - 2) - scaled_power(2.0 * b * n, r, power - 1) +
            scaled_power(b * b, r, power));
  }
  const double a = exponent;
  return coefficient * e *
         (scaled_power(n * (n - 1.0), r, power - 2) -
          scaled_power(2.0 * a * (2.0 * n + 1.0), r, power) +
          scaled_power(4.0 * a * a, r, power + 2));
}

double RadialPrimitive::first_derivative_over_r(double r) const {
  const double n = power;
  const double e = decay(*this, r);
  if (e == 0.0) return 0.0;
  if (kind == PrimitiveKind::SlaterS) {
    return coefficient * e *
           (scaled_power(n, r, power - 2) - scaled_power(2.0 * exponent, r, power - 1));
  }
  return coefficient * e * (scaled_power(n, r, power - 2) - scaled_power(2.0 * exponent, r, power));
}

bool RadialPrimitive::non_smooth_at_center() const {
  if (coefficient == 0.0) return false;
  if (kind == PrimitiveKind::SlaterS) return power <= 1;
  return power == 1;
}

double RadialPrimitive::integral() const {
  const auto m = moment_shape(*this);
  return kFourPi * coefficient * std::tgamma(m.a) / m.s;
}

double RadialPrimitive::cumulative(double r) const {
  if (r <= 0.0) return 0.0;
  const auto m = moment_shape(*this);
  return integral() * boost::math::gamma_p(m.a, m.x(*this, r));
}

double RadialPrimitive::cumulative_complement(double r) const {
  if (r <= 0.0) return integral();
  const auto m = moment_shape(*this);
  return integral() * boost::math::gamma_q(m.a, m.x(*this, r));
}

double RadialPrimitive::length_scale() const {
  return kind == PrimitiveKind::SlaterS ? 1.0 / exponent : 1.0 / std::sqrt(exponent);
}

DensityModel::DensityModel(std::vector<DensityTerm> terms, int electron_count,
                           std::optional<NuclearFrame> frame)
    : terms_(std::move(terms)), electron_count_(electron_count), frame_(std::move(frame)) {
  if (electron_count_ < 0) throw InvalidModel("electron_count must be nonnegative");
  for (std::size_t i = 0; i < terms_.size(); ++i) validate(terms_[i], i);
}

DensityModel DensityModel::translated(const Vec3& shift) const {
  auto moved = terms_;
  for (auto& t : moved) t.center += shift;
  std::optional<NuclearFrame> f;
  if (frame_) f = frame_->translated(shift);
  return DensityModel(std::move(moved), electron_count_, std::move(f));
}

DensityModel DensityModel::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw InvalidModel("scale factor must be nonnegative and finite");
  }
  auto t = terms_;
  for (auto& term : t) term.primitive.coefficient *= factor;
  return DensityModel(std::move(t), electron_count_, frame_);
}

DensityModel DensityModel::without_frame() const {
  return DensityModel(terms_, electron_count_, std::nullopt);
}

std::vector<Vec3> DensityModel::cusp_centers() const {
  std::vector<Vec3> out;
  for (const auto& t : terms_) {
    if (!t.primitive.has_cusp() || t.primitive.coefficient == 0.0) continue;
    bool seen = false;
    for (const auto& c : out) seen = seen || (c - t.center).norm() < kSingularRadius;
    if (!seen) out.push_back(t.center);
  }
  return out;
}

bool DensityModel::is_concentric(Vec3* center) const {
  if (terms_.empty()) return false;
  for (const auto& t : terms_) {
    if ((t.center - terms_.front().center).norm() > kSingularRadius) return false;
  }
  if (center != nullptr) *center = terms_.front().center;
  return true;
}

bool DensityModel::has_cusps() const { return !cusp_centers().empty(); }

double evaluate(const DensityModel& model, const Vec3& point) {
  double sum = 0.0;
  for (const auto& t : model.terms()) sum += t.primitive.value((point - t.center).norm());
  return sum;
}

Vec3 gradient(const DensityModel& model, const Vec3& point) {
  Vec3 g = Vec3::Zero();
  for (const auto& t : model.terms()) {
    const Vec3 d = point - t.center;
    const double r = d.norm();
    if (r < kSingularRadius) {
      if (t.primitive.non_smooth_at_center()) {
        throw AtCuspSingularity("gradient requested at a non-differentiable density center");
      }
      continue;  // smooth radial profile: zero slope at its own center
    }
    g += t.primitive.first_derivative(r) / r * d;
  }
  return g;
}

Mat3 hessian(const DensityModel& model, const Vec3& point) {
  Mat3 h = Mat3::Zero();
  for (const auto& t : model.terms()) {
    const Vec3 d = point - t.center;
    const double r = d.norm();
    const auto& p = t.primitive;
    if (r < kSingularRadius) {
      if (p.non_smooth_at_center()) {
        throw AtCuspSingularity("hessian requested at a non-differentiable density center");
      }
      h += p.first_derivative_over_r(0.0) * Mat3::Identity();
      continue;
    }
    const Vec3 u = d / r;
    const double tangential = p.first_derivative_over_r(r);
    h += tangential * Mat3::Identity() + (p.second_derivative(r) - tangential) * (u * u.transpose());
  }
  return h;
}

double total_integral(const DensityModel& model) {
  double sum = 0.0;
  for (const auto& t : model.terms()) sum += t.primitive.integral();
  return sum;
}

DensityModel normalize(const DensityModel& model, int electron_count) {
  const double total = total_integral(model);
  if (!(total > 0.0)) throw ZeroDensity("cannot normalize a density with zero integral");
  auto terms = model.terms();
  const double factor = static_cast<double>(electron_count) / total;
  for (auto& t : terms) t.primitive.coefficient *= factor;
  return DensityModel(std::move(terms), electron_count, model.frame());
}

DensityModel hydrogenic_density(double charge, const Vec3& center, bool with_frame) {
  RadialPrimitive p{PrimitiveKind::SlaterS, charge * charge * charge / std::numbers::pi, charge, 0};
  std::optional<NuclearFrame> frame;
  if (with_frame) frame = NuclearFrame({Nucleus{center, charge}});
  return DensityModel({DensityTerm{center, p}}, 1, std::move(frame));
}

DensityModel superposed_hydrogenic_density(const NuclearFrame& frame) {
  std::vector<DensityTerm> terms;
  for (const auto& c : frame.centers()) {
    const double z = c.charge;
    terms.push_back({c.position, {PrimitiveKind::SlaterS, z * z * z / std::numbers::pi, z, 0}});
  }
  return DensityModel(std::move(terms), static_cast<int>(frame.size()), frame);
}

}  // namespace kato
