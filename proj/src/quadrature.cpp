#include "tridirac/quadrature.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "tridirac/errors.hpp"

namespace tridirac {

namespace {

struct ScaledLaguerre {
  double value = 0.0;  // L_n * exp(-log_scale)
  double prev = 0.0;   // L_{n-1} * exp(-log_scale)
  double log_scale = 0.0;
};

// Upward recurrence with periodic rescaling so that large nodes do not
// overflow; the ratio L_n / L_{n-1} and log|L_n| stay exact.
ScaledLaguerre scaled_laguerre(int n, double nu, double x) {
  ScaledLaguerre s;
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2.0 * k + nu + 1.0 - x) * cur - (k + nu) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e100) {
      cur *= 1e-100;
      prev *= 1e-100;
      s.log_scale += 100.0 * std::log(10.0);
    }
  }
  s.value = cur;
  s.prev = prev;
  return s;
}

}  // namespace

double QuadratureRule::apply(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    sum += weights[i] * f(nodes[i]);
  }
  return sum;
}

QuadratureRule gauss_laguerre(int order, double nu) {
  if (order < 1) {
    throw ParameterError("quadrature order must be at least 1");
  }
  if (!(nu > -1.0)) {
    throw ParameterError("Gauss-Laguerre parameter nu must exceed -1, got " + std::to_string(nu));
  }
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int k = 0; k < order; ++k) {
    diag(k) = 2.0 * k + nu + 1.0;
    if (k + 1 < order) {
      sub(k) = std::sqrt((k + 1.0) * (k + 1.0 + nu));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Gauss-Laguerre: Jacobi matrix eigenvalue iteration did not converge (order " +
                         std::to_string(order) + ")");
  }

  QuadratureRule rule;
  rule.order = order;
  rule.nu = nu;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double log_norm = std::lgamma(order + nu + 1.0) - std::lgamma(order + 1.0);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 20; ++it) {
      const auto s = scaled_laguerre(order, nu, x);
      const double deriv = (order * s.value - (order + nu) * s.prev) / x;
      const double dx = s.value / deriv;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * x) {
        break;
      }
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw NumericalError("Gauss-Laguerre: Newton polish left node " + std::to_string(i) + " outside (0, inf)");
    }
    // w_i = Gamma(n+nu+1) x_i / (n! (n+1)^2 L_{n+1}(x_i)^2)
    const auto s = scaled_laguerre(order + 1, nu, x);
    const double log_w = log_norm + std::log(x) - 2.0 * std::log(order + 1.0) - 2.0 * (std::log(std::abs(s.value)) + s.log_scale);
    rule.nodes[i] = x;
    rule.weights[i] = std::exp(log_w);
  }
  for (int i = 1; i < order; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw NumericalError("Gauss-Laguerre: nodes not strictly increasing after polishing");
    }
  }
  return rule;
}

RadialMeasure::RadialMeasure(double beta_, double omega_) : beta(beta_), omega(omega_) {
  if (beta == 0.0) {
    throw ParameterError("radial measure needs beta != 0");
  }
  if (!(omega > 0.0)) {
    throw ParameterError("radial measure needs omega > 0");
  }
}

double RadialMeasure::x_of_r(double r) const { return std::exp(beta * std::log(omega * r)); }

double RadialMeasure::r_of_x(double x) const { return std::exp(std::log(x) / beta) / omega; }

double RadialMeasure::prefactor() const { return 1.0 / (omega * std::abs(beta)); }

double RadialMeasure::jacobian_power() const { return -1.0 + 1.0 / beta; }

double inner_product_radial(const std::function<double(double)>& f, const std::function<double(double)>& g,
                            const RadialMeasure& measure, const QuadratureRule& rule) {
  const double jac = measure.jacobian_power();
  double sum = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double x = rule.nodes[i];
    const double r = measure.r_of_x(x);
    const double value = f(r) * g(r);
    if (!std::isfinite(value)) {
      throw NumericalError("inner product: non-finite integrand at x = " + std::to_string(x));
    }
    // strip the rule weight x^nu e^{-x} and add the Jacobian x^{-1+1/beta}
    const double factor = std::exp(x + (jac - rule.nu) * std::log(x));
    sum += rule.weights[i] * value * factor;
  }
  return measure.prefactor() * sum;
}

}  // namespace tridirac
