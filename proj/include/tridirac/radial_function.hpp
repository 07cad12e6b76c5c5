#pragma once

#include <vector>

namespace tridirac {

/// One summand c x^shift L_n^nu(x).
struct LaguerreTerm {
  double coef = 0.0;
  int shift = 0;
  int n = 0;
  double nu = 0.0;
};

/// F(x) = x^power e^{-x/2} sum_k c_k x^{s_k} L_{n_k}^{nu_k}(x).
///
/// Every basis component, every operator image of a basis component and every
/// truncated series lives in this class, so all inner products reduce to a
/// Gauss-Laguerre sum that is exact once the order covers the degree.
class RadialFunction {
 public:
  double power = 0.0;
  std::vector<LaguerreTerm> terms;

  RadialFunction() = default;
  explicit RadialFunction(double power_) : power(power_) {}

  /// Polynomial part P(x), without x^power e^{-x/2}.
  double poly(double x) const;
  double value(double x) const;
  /// dF/dx and d^2F/dx^2 at x > 0.
  double d1(double x) const;
  double d2(double x) const;

  /// Highest power of x appearing in the polynomial part.
  int degree() const;
  bool empty() const { return terms.empty(); }

  /// dF/dx, expressed in the same class with power - 1.
  RadialFunction derivative() const;
  RadialFunction times_x(int k = 1) const;
  /// Multiply by x^e; integer parts are kept in the power, not the shifts.
  RadialFunction times_power(double e) const;
  RadialFunction scaled(double c) const;

  /// Sum of two functions whose powers differ by an integer.
  RadialFunction& operator+=(const RadialFunction& other);
  /// Merge duplicate (shift, n, nu) terms and drop exact zeros.
  RadialFunction compact() const;
};

RadialFunction operator+(RadialFunction a, const RadialFunction& b);

}  // namespace tridirac
