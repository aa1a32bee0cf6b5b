#include "kato/lebedev.hpp"

#include "kato/errors.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace kato {
namespace {

// Orbit generators of the octahedral group, in the Lebedev-Laikov numbering:
//   1: (1,0,0)        6 points
//   2: (0,a,a)       12 points, a = 1/sqrt2
//   3: (a,a,a)        8 points, a = 1/sqrt3
//   4: (a,a,b)       24 points, b = sqrt(1 - 2a^2)
//   5: (a,b,0)       24 points, b = sqrt(1 - a^2)
//   6: (a,b,c)       48 points, c = sqrt(1 - a^2 - b^2)
struct Orbit {
  int code;
  double a;
  double b;
  double weight;
};

struct Rule {
  int order;
  int degree;
  std::vector<Orbit> orbits;
};

const std::array<Rule, 9>& rules() {
  static const std::array<Rule, 9> table = {{
      {6, 3, {{1, 0, 0, 1.0 / 6.0}}},
      {14, 5, {{1, 0, 0, 1.0 / 15.0}, {3, 0, 0, 3.0 / 40.0}}},
      {26, 7, {{1, 0, 0, 1.0 / 21.0}, {2, 0, 0, 4.0 / 105.0}, {3, 0, 0, 9.0 / 280.0}}},
      {38,
       9,
       {{1, 0, 0, 1.0 / 105.0},
        {3, 0, 0, 9.0 / 280.0},
        {5, 0.4597008433809831, 0, 1.0 / 35.0}}},
      {50,
       11,
       {{1, 0, 0, 4.0 / 315.0},
        {2, 0, 0, 64.0 / 2835.0},
        {3, 0, 0, 27.0 / 1280.0},
        {4, 0.3015113445777636, 0, 14641.0 / 725760.0}}},
      {86,
       15,
       {{1, 0, 0, 0.011544011544011417},
        {3, 0, 0, 0.011943909085855992},
        {4, 0.369602846454149, 0, 0.011110555710603163},
        {4, 0.6943540066026656, 0, 0.011876501294537437},
        {5, 0.37424303909034096, 0, 0.011812303746904554}}},
      {110,
       17,
       {{1, 0, 0, 0.003828270494937162},
        {3, 0, 0, 0.009793737512487513},
        {4, 0.1851156353447362, 0, 0.008211737283191111},
        {4, 0.6904210483822922, 0, 0.009942814891178103},
        {4, 0.3956894730559419, 0, 0.009595471336070962},
        {5, 0.4783690288121502, 0, 0.009694996361663029}}},
      {146,
       19,
       {{1, 0, 0, 0.0005996313688220535},
        {2, 0, 0, 0.0073729997186267535},
        {3, 0, 0, 0.007210515360145582},
        {4, 0.6764410400113855, 0, 0.007116355493120403},
        {4, 0.41749612279642084, 0, 0.006753829486310115},
        {4, 0.15746766720370542, 0, 0.007574394159059697},
        {6, 0.14035538117134738, 0.4493328323269427, 0.006991087353304517}}},
      {194,
       23,
       {{1, 0, 0, 0.001782340447244611},
        {2, 0, 0, 0.005716905949977102},
        {3, 0, 0, 0.005573383178848738},
        {4, 0.6712973442695226, 0, 0.005608704082587997},
        {4, 0.2892465627575439, 0, 0.005158237711805383},
        {4, 0.4446933178717437, 0, 0.005518771467273614},
        {4, 0.1299335447650067, 0, 0.004106777028169394},
        {5, 0.3457702197611283, 0, 0.005051846064614808},
        {6, 0.159041710538353, 0.8360360154824589, 0.005530248916233094}}},
  }};
  return table;
}

// All distinct sign/permutation images of (x, y, z).
void expand(double x, double y, double z, double w, std::vector<SpherePoint>& out) {
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const std::array<double, 3> base = {x, y, z};
  const auto start = out.size();
  for (const auto& p : perms) {
    for (int s = 0; s < 8; ++s) {
      Vec3 v(base[p[0]], base[p[1]], base[p[2]]);
      for (int k = 0; k < 3; ++k) {
        if ((s >> k) & 1) v[k] = -v[k];
      }
      bool dup = false;
      for (auto i = start; i < out.size() && !dup; ++i) {
        dup = (out[i].direction - v).squaredNorm() < 1e-24;
      }
      if (!dup) out.push_back({v, w});
    }
  }
}

std::vector<SpherePoint> build(const Rule& rule) {
  std::vector<SpherePoint> pts;
  for (const auto& o : rule.orbits) {
    switch (o.code) {
      case 1:
        expand(1.0, 0.0, 0.0, o.weight, pts);
        break;
      case 2: {
        const double a = std::sqrt(0.5);
        expand(0.0, a, a, o.weight, pts);
        break;
      }
      case 3: {
        const double a = std::sqrt(1.0 / 3.0);
        expand(a, a, a, o.weight, pts);
        break;
      }
      case 4:
        expand(o.a, o.a, std::sqrt(1.0 - 2.0 * o.a * o.a), o.weight, pts);
        break;
      case 5:
        expand(o.a, std::sqrt(1.0 - o.a * o.a), 0.0, o.weight, pts);
        break;
      case 6:
        expand(o.a, o.b, std::sqrt(1.0 - o.a * o.a - o.b * o.b), o.weight, pts);
        break;
      default:
        break;
    }
  }
  return pts;
}

const Rule& find_rule(int order) {
  for (const auto& r : rules()) {
    if (r.order == order) return r;
  }
  throw UnsupportedOrder("unsupported Lebedev order " + std::to_string(order));
}

}  // namespace

const std::vector<SpherePoint>& lebedev_grid(int order) {
  const Rule& rule = find_rule(order);
  static std::mutex mutex;
  static std::map<int, std::vector<SpherePoint>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build(rule)).first;
  return it->second;
}

int lebedev_degree(int order) { return find_rule(order).degree; }

std::span<const int> lebedev_orders() {
  static constexpr std::array<int, 9> orders = {6, 14, 26, 38, 50, 86, 110, 146, 194};
  return orders;
}

}  // namespace kato
