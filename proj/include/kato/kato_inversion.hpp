#pragma once

#include "kato/errors.hpp"
#include "kato/frame.hpp"
#include "kato/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kato {

/// Raised when a density carries no cusp, so no Coulombic potential can be read off it.
class NoCuspsFound : public Error {
 public:
  NoCuspsFound(const std::string& what, std::vector<CriticalPoint> smooth_points)
      : Error(what), smooth_points_(std::move(smooth_points)) {}
  const std::vector<CriticalPoint>& smooth_points() const { return smooth_points_; }

 private:
  std::vector<CriticalPoint> smooth_points_;
};

struct InversionOptions {
  TopologyOptions topology;
  /// Round every estimated charge to the nearest positive integer.
  bool snap_charges = false;
  /// Gate for nearest-neighbour matching against a ground-truth frame (bohr).
  double match_gate = 0.5;
};

struct SkippedPoint {
  CriticalPoint point;
  std::string reason;
};

struct CenterMatch {
  std::size_t truth_index = 0;
  std::size_t estimate_index = 0;
  double position_error = 0.0;  // bohr
  double charge_error = 0.0;    // estimate - truth
};

struct FrameMatch {
  std::vector<CenterMatch> matched;
  std::vector<std::size_t> missing;   // truth centers without an estimate in the gate
  std::vector<std::size_t> spurious;  // estimates without a truth center in the gate

  double max_position_error() const;
  double max_charge_error() const;
  bool complete() const { return missing.empty() && spurious.empty(); }
};

struct ReconstructionReport {
  NuclearFrame estimated_frame;
  /// Raw charges -log_derivative / 2, before any snapping.
  std::vector<double> raw_charges;
  /// |snapped - raw| per center when snapping is on.
  std::vector<double> snap_distances;
  std::vector<CriticalPoint> cusp_points;
  std::vector<SkippedPoint> skipped_points;
  CoulombPotential potential;
  std::optional<FrameMatch> match;
};

struct CuspCheck {
  Vec3 center = Vec3::Zero();
  double charge = 0.0;
  double lhs = 0.0;  // one-sided slope of rho^av at the center
  double rhs = 0.0;  // -2 Z rho(center)
  double residual = 0.0;
  bool converged = false;
  bool passed = false;
};

struct CuspVerification {
  double tolerance = 0.0;
  std::vector<CuspCheck> checks;
  bool all_passed() const;
};

enum class HkCase { I, II, III, IV };
std::string to_string(HkCase c);

struct ModelReconstruction {
  std::optional<ReconstructionReport> report;
  std::string error;  // set when reconstruction failed
  std::vector<CriticalPoint> maxima;
};

struct IncompatibilityVerdict {
  double density_difference = 0.0;  // L-infinity over the probe grid
  std::size_t probe_count = 0;
  bool densities_equal = false;
  /// Set only when both reconstructions succeeded.
  std::optional<bool> potentials_identical;
  ModelReconstruction first;
  ModelReconstruction second;
  HkCase case_label = HkCase::II;
  std::string statement;
};

struct IncompatibilityOptions {
  InversionOptions inversion;
  double position_tol = 1e-4;
  double charge_tol = 1e-2;
  int probe_lebedev_order = 26;
};

/// Nearest-neighbour assignment of estimated centers to ground-truth centers.
FrameMatch match_frames(const NuclearFrame& truth, const NuclearFrame& estimate, double gate);

/// Locates the cusps of rho and reads Z = -(d ln rho^av / dr)/2 at each.
/// Throws NoCuspsFound when the density is cusp-free.
ReconstructionReport reconstruct_potential(const DensityModel& model, const SearchBox& box,
                                           const InversionOptions& options = {});

CuspVerification verify_cusp_conditions(const DensityModel& model, const NuclearFrame& frame,
                                        double tolerance,
                                        const RadialDerivativeOptions& radial = {});

/// Decides whether two densities agree and, if so, whether their reconstructed
/// Coulomb potentials coincide.
IncompatibilityVerdict incompatibility_check(const DensityModel& first, const DensityModel& second,
                                             const SearchBox& box, double tolerance,
                                             const IncompatibilityOptions& options = {});

/// Union of Lebedev spheres (radii 0.1, 0.5, 1, 2, 4 bohr) around each point.
std::vector<Vec3> probe_grid(const std::vector<Vec3>& centers, int lebedev_order = 26);

}  // namespace kato
