#pragma once

#include "kato/frame.hpp"

#include <span>
#include <vector>

namespace kato {

struct SpherePoint {
  Vec3 direction;
  double weight;  // weights sum to 1
};

/// Octahedrally symmetric Lebedev rule with the given number of points.
/// Supported orders: 6, 14, 26, 38, 50, 86, 110, 146, 194.
/// Throws UnsupportedOrder otherwise.
const std::vector<SpherePoint>& lebedev_grid(int order);

/// Algebraic degree integrated exactly by the rule of `order` points.
int lebedev_degree(int order);

std::span<const int> lebedev_orders();

}  // namespace kato
