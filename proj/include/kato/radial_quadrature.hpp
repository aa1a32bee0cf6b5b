#pragma once

#include <functional>
#include <vector>

namespace kato {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1].
const QuadratureRule& gauss_legendre(int n);

/// Gauss-Laguerre rule with the exponential folded into the weights:
/// int_0^inf g(x) dx ~= sum_i W_i g(x_i), W_i = w_i exp(x_i).
const QuadratureRule& gauss_laguerre(int n);

struct RadialQuadratureOptions {
  int laguerre_nodes = 200;
  int legendre_nodes = 64;
  /// Largest change tolerated when the node count is doubled.
  double convergence_tol = 1e-8;
};

/// int_shift^inf f(r) dr with the Laguerre variable x = decay_rate (r - shift).
/// Throws QuadratureNotConverged when doubling the nodes moves the result by
/// more than convergence_tol * max(1, |result|).
double semi_infinite_integral(const std::function<double(double)>& f, double decay_rate,
                              double shift, const RadialQuadratureOptions& options);

/// int_a^b f(r) dr by Gauss-Legendre with the same doubling check.
double finite_integral(const std::function<double(double)>& f, double a, double b,
                       const RadialQuadratureOptions& options);

}  // namespace kato
