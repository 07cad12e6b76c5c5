#pragma once

#include <functional>
#include <vector>

namespace tridirac {

/// Generalized Gauss-Laguerre rule for the weight x^nu e^{-x} on (0, inf).
struct QuadratureRule {
  int order = 0;
  double nu = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Sum of w_i f(x_i).
  double apply(const std::function<double(double)>& f) const;
};

/// Nodes are the zeros of L_order^nu, found as eigenvalues of the Jacobi
/// matrix and then polished by Newton steps on the Laguerre recurrence.
QuadratureRule gauss_laguerre(int order, double nu);

/// Change of variables x = (omega r)^beta. For either sign of beta,
///   int_0^inf dr F = 1/(omega |beta|) int_0^inf x^{-1+1/beta} F dx.
struct RadialMeasure {
  double beta = 1.0;
  double omega = 1.0;

  RadialMeasure() = default;
  RadialMeasure(double beta, double omega);

  double x_of_r(double r) const;
  double r_of_x(double x) const;
  double prefactor() const;       // 1 / (omega |beta|)
  double jacobian_power() const;  // -1 + 1/beta
};

/// int_0^inf f(r) g(r) dr evaluated in x with the supplied rule. The rule's
/// nu is the envelope exponent: the caller promises f g x^{-1+1/beta} behaves
/// like x^{rule.nu} e^{-x} times a smooth remainder.
double inner_product_radial(const std::function<double(double)>& f, const std::function<double(double)>& g,
                            const RadialMeasure& measure, const QuadratureRule& rule);

}  // namespace tridirac
