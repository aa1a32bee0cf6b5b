#include "kato/topology.hpp"

#include "kato/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace kato {
namespace {

// 24 directions of the octahedral orbit (a, a, b), a = 1/sqrt(11).
const std::vector<Vec3>& probe_directions() {
  static const std::vector<Vec3> dirs = [] {
    std::vector<Vec3> out;
    const double a = 1.0 / std::sqrt(11.0);
    const double b = std::sqrt(1.0 - 2.0 * a * a);
    for (int axis = 0; axis < 3; ++axis) {
      for (int s = 0; s < 8; ++s) {
        Vec3 v;
        v[axis] = b;
        v[(axis + 1) % 3] = a;
        v[(axis + 2) % 3] = a;
        for (int k = 0; k < 3; ++k) {
          if ((s >> k) & 1) v[k] = -v[k];
        }
        out.push_back(v);
      }
    }
    return out;
  }();
  return dirs;
}

bool lex_less(const Vec3& a, const Vec3& b) {
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

double density_scale(const DensityModel& model) {
  double scale = 0.0;
  for (const auto& t : model.terms()) scale = std::max(scale, evaluate(model, t.center));
  return scale;
}

struct Candidate {
  Vec3 position;
  double density;
};

// Compass search on rho. Tolerates the gradient discontinuity at cusps.
std::optional<Candidate> ascend(const DensityModel& model, const SearchBox& box, Vec3 x,
                                double step, const TopologyOptions& options, double floor) {
  double fx = evaluate(model, x);
  const double max_step = step * 4.0;
  int iterations = 0;
  while (step > options.ascent_step_tol) {
    if (++iterations > options.max_ascent_iterations) return std::nullopt;
    Vec3 best = x;
    double fbest = fx;
    for (int axis = 0; axis < 3; ++axis) {
      for (double sign : {1.0, -1.0}) {
        Vec3 trial = x;
        trial[axis] += sign * step;
        const double ft = evaluate(model, trial);
        if (ft > fbest) {
          fbest = ft;
          best = trial;
        }
      }
    }
    if (fbest > fx) {
      x = best;
      fx = fbest;
      step = std::min(step * 2.0, max_step);
      if (!box.contains(x)) return std::nullopt;
    } else {
      step *= 0.5;
    }
  }
  if (!(fx > floor)) return std::nullopt;
  return Candidate{x, fx};
}

bool near_any(const Vec3& x, const std::vector<Vec3>& points, double radius) {
  return std::any_of(points.begin(), points.end(),
                     [&](const Vec3& p) { return (p - x).norm() < radius; });
}

constexpr double kNewtonStepTol = 1e-6;

std::optional<Candidate> newton(const DensityModel& model, const SearchBox& box, Vec3 x,
                                double max_step, const std::vector<Vec3>& cusps,
                                const TopologyOptions& options, double gtol, double floor) {
  for (int it = 0; it < options.max_newton_iterations; ++it) {
    if (near_any(x, cusps, options.newton_exclusion_radius)) return std::nullopt;
    Vec3 g;
    Mat3 h;
    try {
      g = gradient(model, x);
      h = hessian(model, x);
    } catch (const AtCuspSingularity&) {
      return std::nullopt;
    }
    const double rho = evaluate(model, x);
    if (!(rho > floor)) return std::nullopt;

    Eigen::SelfAdjointEigenSolver<Mat3> eig(h);
    const Vec3& lam = eig.eigenvalues();
    const double lam_max = lam.cwiseAbs().maxCoeff();
    if (!(lam_max > 0.0)) return std::nullopt;
    Vec3 dx = Vec3::Zero();
    for (int k = 0; k < 3; ++k) {
      if (std::abs(lam[k]) > 1e-12 * lam_max) {
        const Vec3 v = eig.eigenvectors().col(k);
        dx -= (v.dot(g) / lam[k]) * v;
      }
    }
    const double len = dx.norm();
    // A small gradient alone is not enough: far tails are nearly flat too.
    if (g.norm() <= gtol && len <= kNewtonStepTol) return Candidate{x, rho};
    if (len > max_step) dx *= max_step / len;
    x += dx;
    if (!box.contains(x)) return std::nullopt;
  }
  return std::nullopt;
}

// Keeps the densest representative of each cluster.
std::vector<Candidate> deduplicate(std::vector<Candidate> all, double radius) {
  std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
    if (a.density != b.density) return a.density > b.density;
    return lex_less(a.position, b.position);
  });
  std::vector<Candidate> kept;
  for (const auto& c : all) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](const Candidate& k) {
      return (k.position - c.position).norm() < radius;
    });
    if (!dup) kept.push_back(c);
  }
  return kept;
}

}  // namespace

std::string to_string(CriticalKind kind) {
  return kind == CriticalKind::CuspMaximum ? "cusp_maximum" : "smooth_critical";
}

SearchBox SearchBox::around(const DensityModel& model) {
  SearchBox box;
  if (model.terms().empty()) return box;
  box.lower = box.upper = model.terms().front().center;
  double length = 0.0;
  for (const auto& t : model.terms()) {
    box.lower = box.lower.cwiseMin(t.center);
    box.upper = box.upper.cwiseMax(t.center);
    length = std::max(length, t.primitive.length_scale());
  }
  const Vec3 margin = Vec3::Constant(3.0 * length);
  box.lower -= margin;
  box.upper += margin;
  return box;
}

CriticalPoint classify(const DensityModel& model, const Vec3& position,
                       const TopologyOptions& options) {
  CriticalPoint cp;
  cp.position = position;
  cp.density_value = evaluate(model, position);

  try {
    const auto est = radial_derivative_at_center(model, position, options.radial);
    cp.log_derivative = est.log_derivative;
    cp.log_derivative_defined = true;
  } catch (const ZeroCenterValue&) {
    cp.log_derivative_defined = false;
  }
  cp.kind = (cp.log_derivative_defined && cp.log_derivative < -options.cusp_threshold)
                ? CriticalKind::CuspMaximum
                : CriticalKind::SmoothCritical;

  try {
    cp.gradient_norm = gradient(model, position).norm();
  } catch (const AtCuspSingularity&) {
    cp.gradient_norm.reset();
  }

  double floor = std::numeric_limits<double>::infinity();
  for (double r : {1e-3, 1e-4}) {
    for (const auto& u : probe_directions()) {
      floor = std::min(floor, gradient(model, position + r * u).norm());
    }
  }
  cp.gradient_norm_floor = floor;

  if (cp.kind == CriticalKind::CuspMaximum) {
    cp.rank = 3;
    return cp;
  }
  try {
    Eigen::SelfAdjointEigenSolver<Mat3> eig(hessian(model, position));
    cp.hessian_eigenvalues = eig.eigenvalues();
    cp.hessian_eigenvectors = eig.eigenvectors();
    const double lam_max = cp.hessian_eigenvalues.cwiseAbs().maxCoeff();
    int rank = 0;
    int signature = 0;
    for (int k = 0; k < 3; ++k) {
      const double lam = cp.hessian_eigenvalues[k];
      if (lam_max > 0.0 && std::abs(lam) > options.eigenvalue_relative_tol * lam_max) {
        ++rank;
        signature += lam > 0.0 ? 1 : -1;
      }
    }
    cp.rank = rank;
    cp.signature = signature;
  } catch (const AtCuspSingularity&) {
    cp.rank = 0;
  }
  return cp;
}

std::vector<CriticalPoint> find_critical_points(const DensityModel& model, const SearchBox& box,
                                                const TopologyOptions& options) {
  if (options.seeds_per_axis < 4) throw Error("seeds_per_axis must be at least 4");
  for (const auto& t : model.terms()) {
    if (!box.contains(t.center)) throw Error("search box does not contain every density center");
  }
  const double scale = density_scale(model);
  if (!(scale > 0.0)) throw EmptyResult("density vanishes identically; nothing to search");
  const double floor = 1e-14 * scale;
  const double gtol = options.gradient_relative_tol * scale;

  const int n = options.seeds_per_axis;
  const Vec3 extent = box.upper - box.lower;
  const Vec3 spacing = extent / n;
  std::vector<Vec3> seeds;
  seeds.reserve(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        seeds.push_back(box.lower + Vec3((i + 0.5) * spacing[0], (j + 0.5) * spacing[1],
                                         (k + 0.5) * spacing[2]));
      }
    }
  }
  const double initial_step = 0.5 * spacing.minCoeff();

  std::vector<Candidate> maxima;
  for (const auto& s : seeds) {
    if (auto c = ascend(model, box, s, initial_step, options, floor)) maxima.push_back(*c);
  }
  maxima = deduplicate(std::move(maxima), options.dedup_radius);

  std::vector<Candidate> found;
  std::vector<Vec3> cusps;
  std::vector<Vec3> smooth_maxima;
  for (const auto& m : maxima) {
    if (classify(model, m.position, options).kind == CriticalKind::CuspMaximum) {
      cusps.push_back(m.position);
      found.push_back(m);
    } else {
      smooth_maxima.push_back(m.position);
    }
  }

  const double max_step = std::min(0.5, spacing.minCoeff());
  auto run_newton = [&](const Vec3& start) {
    if (auto c = newton(model, box, start, max_step, cusps, options, gtol, floor)) {
      found.push_back(*c);
    }
  };
  for (const auto& m : smooth_maxima) run_newton(m);
  for (const auto& s : seeds) run_newton(s);

  if (found.empty()) throw EmptyResult("no critical point converged from any seed");
  found = deduplicate(std::move(found), options.dedup_radius);

  std::vector<CriticalPoint> out;
  out.reserve(found.size());
  for (const auto& c : found) out.push_back(classify(model, c.position, options));
  std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return lex_less(a.position, b.position);
  });
  return out;
}

}  // namespace kato
