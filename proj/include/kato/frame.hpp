#pragma once

#include <Eigen/Core>

#include <vector>

namespace kato {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Nucleus {
  Vec3 position = Vec3::Zero();  // bohr
  double charge = 0.0;           // e
};

/// Point nuclei that generate a Coulombic external potential.
/// Charges must be positive and no two centers may coalesce.
class NuclearFrame {
 public:
  static constexpr double kMinSeparation = 1e-6;

  NuclearFrame() = default;
  explicit NuclearFrame(std::vector<Nucleus> centers);

  const std::vector<Nucleus>& centers() const { return centers_; }
  std::size_t size() const { return centers_.size(); }
  bool empty() const { return centers_.empty(); }
  const Nucleus& operator[](std::size_t i) const { return centers_[i]; }

  NuclearFrame translated(const Vec3& shift) const;

  /// Same set of nuclei up to ordering, positions within `position_tol`, charges within `charge_tol`.
  bool same_as(const NuclearFrame& other, double position_tol = 1e-12,
               double charge_tol = 1e-12) const;

 private:
  std::vector<Nucleus> centers_;
};

/// v(r) = offset - sum_a Z_a / |r - R_a|
///
/// The constant offset is kept apart from the frame so that potentials which
/// differ only by an additive constant can be recognised exactly.
class CoulombPotential {
 public:
  CoulombPotential() = default;
  explicit CoulombPotential(NuclearFrame frame, double offset = 0.0)
      : frame_(std::move(frame)), offset_(offset) {}

  double operator()(const Vec3& point) const;

  const NuclearFrame& frame() const { return frame_; }
  double offset() const { return offset_; }

  /// True when the two potentials differ by at most an additive constant.
  bool equal_up_to_constant(const CoulombPotential& other, double position_tol = 1e-12,
                            double charge_tol = 1e-12) const {
    return frame_.same_as(other.frame_, position_tol, charge_tol);
  }

 private:
  NuclearFrame frame_;
  double offset_ = 0.0;
};

}  // namespace kato
