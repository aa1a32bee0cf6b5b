#pragma once

#include "kato/density_model.hpp"
#include "kato/spherical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kato {

enum class CriticalKind { CuspMaximum, SmoothCritical };

std::string to_string(CriticalKind kind);

struct CriticalPoint {
  Vec3 position = Vec3::Zero();
  CriticalKind kind = CriticalKind::SmoothCritical;
  /// Number of Hessian eigenvalues above the zero threshold. Cusp maxima are
  /// reported with rank 3; their Hessian does not exist.
  int rank = 0;
  /// Sum of eigenvalue signs, only for smooth points with a defined Hessian.
  std::optional<int> signature;
  double density_value = 0.0;
  /// |grad rho| at the point; empty where the gradient does not exist.
  std::optional<double> gradient_norm;
  /// min |grad rho| over a punctured ball around the point.
  double gradient_norm_floor = 0.0;
  double log_derivative = 0.0;
  bool log_derivative_defined = false;
  Vec3 hessian_eigenvalues = Vec3::Zero();   // ascending
  Mat3 hessian_eigenvectors = Mat3::Zero();  // columns match eigenvalues

  bool is_maximum() const {
    return kind == CriticalKind::CuspMaximum || (rank == 3 && signature == -3);
  }
};

struct SearchBox {
  Vec3 lower = Vec3::Zero();
  Vec3 upper = Vec3::Zero();

  bool contains(const Vec3& p) const {
    return (p.array() >= lower.array()).all() && (p.array() <= upper.array()).all();
  }
  /// Bounding box of the term centers inflated by 3 decay lengths of the most diffuse term.
  static SearchBox around(const DensityModel& model);
};

struct TopologyOptions {
  int seeds_per_axis = 8;
  /// |log-derivative| threshold separating cusps from smooth points (1/bohr).
  double cusp_threshold = 1e-3;
  /// Newton steps are not taken this close to a detected cusp (bohr).
  double newton_exclusion_radius = 1e-2;
  /// Hessian eigenvalue zero threshold, relative to max |lambda|.
  double eigenvalue_relative_tol = 1e-8;
  double dedup_radius = 1e-4;
  /// Stationarity threshold on |grad rho| relative to the largest center density.
  double gradient_relative_tol = 1e-8;
  double ascent_step_tol = 1e-10;
  int max_ascent_iterations = 20000;
  int max_newton_iterations = 200;
  RadialDerivativeOptions radial;
};

/// Full diagnostic of the density at `position`.
CriticalPoint classify(const DensityModel& model, const Vec3& position,
                       const TopologyOptions& options = {});

/// Multistart search for local maxima (cusp-tolerant pattern ascent) and smooth
/// stationary points (safeguarded Newton on grad rho = 0). Results are
/// deduplicated and sorted lexicographically by position. Throws EmptyResult
/// when no seed converges.
std::vector<CriticalPoint> find_critical_points(const DensityModel& model, const SearchBox& box,
                                                const TopologyOptions& options = {});

}  // namespace kato
