#pragma once

#include <vector>

#include "tridirac/basis.hpp"
#include "tridirac/orthopoly.hpp"

namespace tridirac {

/// Constants entering the matrix elements and recursions.
struct DerivedParams {
  double p = 0.0;  // beta (1 - 2 tau)
  double q = 0.0;  // A / omega^beta - beta rho / 2
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  double zeta = 0.0;

  // Meixner-Pollaczek form of the A/B recursion: g_n = sign^n P_n^lambda(y, theta)
  // in `family` (hyperbolic when |sigma+/sigma-| > 1).
  PolyFamily family = PolyFamily::HyperbolicMP;
  double theta = 0.0;
  double y = 0.0;
  double lambda_mp = 0.0;
  int sign = 1;

  // Representation C
  double u = 0.0;
  double z = 0.0;
  double d = 0.0;
  double y_sq = 0.0;  // z (z + rho u / p), may be negative off kinetic balance
};

/// Throws ParameterError when rho^2 = 1 in representation A or B, or when
/// p = 0 (tau = 1/2) makes q/p undefined.
DerivedParams derived_params(const BasisParams& basis);

/// Closed-form <psi_n|H-1|psi_m>; exactly 0 for |n-m| >= 2.
double matrix_element_analytic(const BasisParams& basis, const DerivedParams& derived, int n, int m);

/// The same element from the bilinear form
///   (1-eps)<+|+> - (1+eps-1/tau)<-|-> + lambda omega {<+_n| x^{-1/beta}[kappa - beta gamma + x q] |-_m> + (n<->m)}
/// integrated by Gauss-Laguerre.
double matrix_element_numeric(const BasisParams& basis, int n, int m, int epsilon = 1, int min_order = 1);

/// Symmetric tridiagonal H-1: diag D_0..D_N, offdiag B_n = (n, n+1) for n < N.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;

  int size() const { return static_cast<int>(diag.size()); }
  double element(int n, int m) const;
};

TridiagonalOperator build_operator(const BasisParams& basis, const DerivedParams& derived, int N);

/// The two rows of the radial Dirac operator applied to a spinor (upper, lower)
///   row+ = (1-eps) U + lambda (kappa/r + A/r^mu - d/dr) V
///   row- = lambda (kappa/r + A/r^mu + d/dr) U - (1+eps) V
/// with each contribution kept separately for residual scaling.
struct DiracImage {
  RadialFunction row_plus;
  RadialFunction row_minus;
  RadialFunction mass_plus;
  RadialFunction potential_plus;
  RadialFunction derivative_plus;
  RadialFunction mass_minus;
  RadialFunction potential_minus;
  RadialFunction derivative_minus;
};

DiracImage apply_dirac(const PhysicalParams& phys, const RadialMeasure& measure, const RadialFunction& upper,
                       const RadialFunction& lower);

/// Second-order operator for the component of the given sign:
///   [-d^2/dr^2 + kappa(kappa+-1)/r^2 + A^2/r^{2mu} + A(2kappa+-mu)/r^{mu+1}] f.
/// The energy term (eps^2-1)/lambda^2 vanishes at eps = +-1.
struct SecondOrderImage {
  RadialFunction total;
  RadialFunction derivative;
  RadialFunction potential;
};

SecondOrderImage apply_second_order(const PhysicalParams& phys, const RadialMeasure& measure, const RadialFunction& f,
                                    int component);

}  // namespace tridirac
