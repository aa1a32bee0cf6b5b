#include "kato/radial_quadrature.hpp"

#include "kato/errors.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>

namespace kato {
namespace {

QuadratureRule build_legendre(int n) {
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

// L_n and L_{n-1} at x, rescaled to stay finite; log_scale carries the factor.
void laguerre_pair(int n, double x, double& ln, double& lnm1, double& log_scale) {
  double p0 = 1.0;
  double p1 = 1.0 - x;
  log_scale = 0.0;
  if (n == 0) {
    ln = p0;
    lnm1 = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0 - x) * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    if (std::abs(p1) > 1e150) {
      p0 *= 1e-150;
      p1 *= 1e-150;
      log_scale += 150.0 * std::numbers::ln10;
    }
  }
  ln = p1;
  lnm1 = p0;
}

QuadratureRule build_laguerre(int n) {
  // Golub-Welsch eigenvalues as starting points, Newton-polished.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jacobi(i, i) = 2.0 * i + 1.0;
    if (i + 1 < n) jacobi(i, i + 1) = jacobi(i + 1, i) = i + 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jacobi, Eigen::EigenvaluesOnly);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = eig.eigenvalues()[i];
    double ln = 0.0, lnm1 = 0.0, log_scale = 0.0, deriv = 0.0;
    for (int it = 0; it < 50; ++it) {
      laguerre_pair(n, x, ln, lnm1, log_scale);
      deriv = n * (ln - lnm1) / x;
      const double dx = ln / deriv;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * x) break;
    }
    laguerre_pair(n, x, ln, lnm1, log_scale);
    deriv = n * (ln - lnm1) / x;
    // w = 1 / (x L_n'(x)^2); scaled weight W = w e^x
    const double log_w = x - std::log(x) - 2.0 * (std::log(std::abs(deriv)) + log_scale);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_w);
  }
  return rule;
}

template <class Builder>
const QuadratureRule& cached(int n, std::map<int, QuadratureRule>& cache, std::mutex& m,
                             Builder build) {
  if (n < 1) throw Error("quadrature rule needs at least one node");
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

double laguerre_sum(const std::function<double(double)>& f, double rate, double shift, int n) {
  const auto& rule = gauss_laguerre(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double w = rule.weights[i];
    if (w == 0.0) continue;
    sum += w * f(shift + rule.nodes[i] / rate);
  }
  return sum / rate;
}

double legendre_sum(const std::function<double(double)>& f, double a, double b, int n) {
  const auto& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

void check_doubling(double coarse, double fine, double tol, const char* what) {
  if (std::abs(fine - coarse) > tol * std::max(1.0, std::abs(fine))) {
    std::ostringstream os;
    os << what << " quadrature not converged: doubling nodes changed the result by "
       << std::abs(fine - coarse);
    throw QuadratureNotConverged(os.str());
  }
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex m;
  return cached(n, cache, m, build_legendre);
}

const QuadratureRule& gauss_laguerre(int n) {
  static std::map<int, QuadratureRule> cache;
  static std::mutex m;
  return cached(n, cache, m, build_laguerre);
}

double semi_infinite_integral(const std::function<double(double)>& f, double decay_rate,
                              double shift, const RadialQuadratureOptions& options) {
  if (!(decay_rate > 0.0)) throw Error("decay rate must be positive");
  const double coarse = laguerre_sum(f, decay_rate, shift, options.laguerre_nodes);
  const double fine = laguerre_sum(f, decay_rate, shift, 2 * options.laguerre_nodes);
  check_doubling(coarse, fine, options.convergence_tol, "Gauss-Laguerre");
  return coarse;
}

double finite_integral(const std::function<double(double)>& f, double a, double b,
                       const RadialQuadratureOptions& options) {
  const double coarse = legendre_sum(f, a, b, options.legendre_nodes);
  const double fine = legendre_sum(f, a, b, 2 * options.legendre_nodes);
  check_doubling(coarse, fine, options.convergence_tol, "Gauss-Legendre");
  return coarse;
}

}  // namespace kato
