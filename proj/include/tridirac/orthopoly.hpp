#pragma once

/// \file orthopoly.hpp
///
/// Orthogonal polynomials used by the tridiagonal construction.
///
/// Every family is available twice: the `*_eval` functions run the upward
/// three-term recurrence, the `*_series` functions sum the terminating
/// hypergeometric series in 100-digit arithmetic. The two paths share no code
/// and serve as each other's oracle. Laguerre, Meixner-Pollaczek and
/// continuous dual Hahn recur in double; the hyperbolic and modified families
/// recur in 100-digit arithmetic, because their polynomial can be the decaying
/// solution of its own recurrence.
///
/// Conventions:
///   L_n^nu(x)          generalized Laguerre, L_0 = 1, L_1 = nu + 1 - x
///   P_n^lambda(y, t)   Meixner-Pollaczek, 0 < t < pi
///   Phat_n^lambda(y,t) hyperbolic Meixner-Pollaczek, Phat(y, t) = P(-iy, it)
///   S_n^lambda(y; a,b) continuous dual Hahn, normalized as 3F2(... | 1)
///   Shat_n^lambda(y; a,b) = S_n^lambda(-iy; a,b)
///
/// The continuous dual Hahn recurrence is written with the argument squared:
///   y^2 S_n = [(n+l+a)(n+l+b) + n(n+a+b-1) - l^2] S_n
///             - n(n+a+b-1) S_{n-1} - (n+l+a)(n+l+b) S_{n+1}.
/// Replacing y by -iy flips the sign of y^2, which is the recurrence used for
/// the modified family.

#include <vector>

namespace tridirac {

enum class PolyFamily { Laguerre, MeixnerPollaczek, HyperbolicMP, ContinuousDualHahn, ModifiedCDH };

/// Family tag plus the parameters of one polynomial evaluation. Fields not
/// used by the family are ignored. For ContinuousDualHahn `y` holds y^2.
struct PolyParams {
  PolyFamily family = PolyFamily::Laguerre;
  int n = 0;
  double nu = 0.0;
  double lambda = 1.0;
  double y = 0.0;
  double theta = 0.0;
  double a = 1.0;
  double b = 1.0;
};

// Laguerre ------------------------------------------------------------------

double laguerre_eval(int n, double nu, double x);

/// L_0^nu(x) ... L_{n_max}^nu(x) from one recurrence sweep.
std::vector<double> laguerre_sequence(int n_max, double nu, double x);

double laguerre_series(int n, double nu, double x);

/// dL_n^nu/dx = [n L_n - (n+nu) L_{n-1}] / x. At x = 0 the analytic limit
/// -Gamma(n+nu+1) / (Gamma(n) Gamma(nu+2)) is returned.
double laguerre_deriv(int n, double nu, double x);

/// Second derivative obtained by differentiating the first-derivative
/// identity once more: x L'' = (n-1) L'_n - (n+nu) L'_{n-1}.
double laguerre_deriv2(int n, double nu, double x);

// Meixner-Pollaczek -----------------------------------------------------------

double mp_eval(int n, double lambda, double y, double theta);
double mp_series(int n, double lambda, double y, double theta);

/// Weight of the Meixner-Pollaczek orthogonality on the real line, including
/// the (2 sin theta)^{2 lambda} factor so that the squared norm is
/// Gamma(n + 2 lambda) / n!.
double mp_weight(double lambda, double y, double theta);

double hyp_mp_eval(int n, double lambda, double y, double theta);
double hyp_mp_series(int n, double lambda, double y, double theta);

// Continuous dual Hahn --------------------------------------------------------

double cdh_eval(int n, double lambda, double y_sq, double a, double b);
double cdh_series(int n, double lambda, double y_sq, double a, double b);

/// Half-line weight; squared norm is n! Gamma(n+a+b) / (Gamma(n+l+a) Gamma(n+l+b)).
double cdh_weight(double lambda, double y, double a, double b);

double mod_cdh_eval(int n, double lambda, double y, double a, double b);
double mod_cdh_series(int n, double lambda, double y, double a, double b);

/// Modified family parametrized by Y = y^2, which may be negative (then y is
/// imaginary and the polynomial is still real).
double mod_cdh_eval_sq(int n, double lambda, double y_sq, double a, double b);
double mod_cdh_series_sq(int n, double lambda, double y_sq, double a, double b);

// Dispatch ------------------------------------------------------------------

double evaluate(const PolyParams& p);
double evaluate_series(const PolyParams& p);

// Gamma helpers ---------------------------------------------------------------

/// sqrt(Gamma(a) / Gamma(b)) through log-gamma differences; a, b > 0.
double sqrt_gamma_ratio(double a, double b);

/// log |Gamma(x + iy)| for x > 0.
double log_abs_gamma(double x, double y);

}  // namespace tridirac
