#pragma once

#include <optional>
#include <string>

#include "tridirac/quadrature.hpp"
#include "tridirac/radial_function.hpp"

namespace tridirac {

/// Radial Dirac problem with odd potential W(r) = A / r^mu at rest-mass
/// energy epsilon = +-1. `lambda` is the Compton wavelength.
struct PhysicalParams {
  double A = 1.0;
  double mu = 2.0;
  int kappa = 1;
  double lambda = 1.0;
  int epsilon = 1;

  double beta() const { return 1.0 - mu; }
  /// Throws ParameterError naming the excluded physical case.
  void validate() const;
};

enum class Representation { A, B, C };

std::string to_string(Representation rep);

/// Optional overrides for the free basis constants. Unset fields take the
/// kinetic-balance values (tau = 1/4, gamma = kappa/beta, rho = 2A/(beta omega^beta)).
struct BasisOptions {
  std::optional<double> omega;
  std::optional<double> alpha;
  std::optional<double> tau;
  std::optional<double> gamma;
  std::optional<double> rho;
  std::optional<Representation> representation;
};

struct BasisParams {
  Representation rep = Representation::A;
  double beta = 1.0;
  double omega = 1.0;
  double alpha = 0.0;
  double nu = 0.0;
  double gamma = 0.0;
  double rho = 0.0;
  double tau = 0.25;
  double lambda = 1.0;
  int kappa = 1;
  double A = 1.0;
  bool kinetic_balance = true;

  RadialMeasure measure() const { return {beta, omega}; }
  double x_of_r(double r) const;
  /// a_n = sqrt(omega |beta| n! / Gamma(n+nu+1))
  double norm_const(int n) const;
};

/// Picks representation A (beta kappa > 0, kappa != -1), B (beta kappa < 0) or
/// C (beta kappa > 0 with kappa = -1, or on request) and fills every constant.
BasisParams select_representation(const PhysicalParams& phys, const BasisOptions& options = {});

/// Square-integrability and boundary constraints on (alpha, nu) for the
/// active representation and sign of beta. Throws ParameterError.
void check_table(const BasisParams& basis);

/// Which closed form of the lower component to build.
enum class LowerForm {
  Representation,  // the representation's own reduced form
  General,         // generic form valid for any (alpha, nu, gamma, rho)
};

/// phi_n^+ as x^alpha e^{-x/2} a_n L_n^nu.
RadialFunction upper_component(const BasisParams& basis, int n);

/// phi_n^- with prefactor lambda omega tau beta a_n x^{alpha-1/beta} e^{-x/2}.
RadialFunction lower_component(const BasisParams& basis, int n, LowerForm form = LowerForm::Representation);

/// 2 lambda omega tau beta x^{-1/beta} (gamma + rho x/2 + x d/dx) applied to
/// an arbitrary radial function.
RadialFunction kinetic_balance_operator(const BasisParams& basis, const RadialFunction& upper);

double phi_plus(const BasisParams& basis, int n, double r);
double phi_minus(const BasisParams& basis, int n, double r);

/// Same operator evaluated pointwise with the analytic Laguerre derivative.
double kinetic_balance_apply(const BasisParams& basis, int n, double r);

/// lambda/2 (kappa/r + A/r^mu + d/dr) phi_n^+, the physical relation at
/// epsilon = +1, evaluated pointwise.
double kinetic_balance_physical(const BasisParams& basis, int n, double r);

/// int_0^inf u(r) v(r) (x(r))^extra_power dr, exact by Gauss-Laguerre.
double radial_overlap(const RadialFunction& u, const RadialFunction& v, const RadialMeasure& measure,
                      double extra_power = 0.0, int min_order = 1);

}  // namespace tridirac
