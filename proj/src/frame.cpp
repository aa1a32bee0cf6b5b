#include "kato/frame.hpp"

#include "kato/errors.hpp"

#include <cmath>
#include <string>

namespace kato {

NuclearFrame::NuclearFrame(std::vector<Nucleus> centers) : centers_(std::move(centers)) {
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    const auto& c = centers_[i];
    if (!c.position.allFinite()) {
      throw InvalidModel("frame center " + std::to_string(i) + ": non-finite position");
    }
    if (!(c.charge > 0.0) || !std::isfinite(c.charge)) {
      throw InvalidModel("frame center " + std::to_string(i) + ": charge must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((c.position - centers_[j].position).norm() <= kMinSeparation) {
        throw InvalidModel("frame centers " + std::to_string(j) + " and " + std::to_string(i) +
                           " coalesce");
      }
    }
  }
}

NuclearFrame NuclearFrame::translated(const Vec3& shift) const {
  auto moved = centers_;
  for (auto& c : moved) c.position += shift;
  return NuclearFrame(std::move(moved));
}

bool NuclearFrame::same_as(const NuclearFrame& other, double position_tol,
                           double charge_tol) const {
  if (size() != other.size()) return false;
  std::vector<bool> used(other.size(), false);
  for (const auto& c : centers_) {
    bool found = false;
    for (std::size_t j = 0; j < other.size(); ++j) {
      if (used[j]) continue;
      const auto& o = other.centers_[j];
      if ((c.position - o.position).norm() <= position_tol &&
          std::abs(c.charge - o.charge) <= charge_tol) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

double CoulombPotential::operator()(const Vec3& point) const {
  double v = offset_;
  for (const auto& c : frame_.centers()) {
    v -= c.charge / (point - c.position).norm();
  }
  return v;
}

}  // namespace kato
