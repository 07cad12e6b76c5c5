#include "tridirac/orthopoly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "tridirac/errors.hpp"
#include "tridirac/real.hpp"

namespace tridirac {

namespace {

using RealHP = Real;

struct ComplexHP {
  RealHP re;
  RealHP im;
};

ComplexHP operator*(const ComplexHP& a, const ComplexHP& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexHP operator+(const ComplexHP& a, const ComplexHP& b) { return {a.re + b.re, a.im + b.im}; }

ComplexHP operator*(const ComplexHP& a, const RealHP& s) { return {a.re * s, a.im * s}; }

void require_order(int n) {
  if (n < 0) {
    throw ParameterError("polynomial order must be non-negative, got " + std::to_string(n));
  }
}

void require_laguerre(double nu) {
  if (!(nu > -1.0)) {
    throw ParameterError("Laguerre parameter nu must exceed -1, got " + std::to_string(nu));
  }
}

void require_mp(double lambda, double theta) {
  if (!(lambda > 0.0)) {
    throw ParameterError("Meixner-Pollaczek lambda must be positive");
  }
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw ParameterError("Meixner-Pollaczek theta must lie in (0, pi); use the hyperbolic family otherwise");
  }
}

void require_cdh(double lambda, double y_sq, double a, double b) {
  if (!(y_sq >= 0.0)) {
    throw ParameterError("continuous dual Hahn argument y^2 must be non-negative");
  }
  if (!(lambda > 0.0 && a > 0.0 && b > 0.0)) {
    throw ParameterError("continuous dual Hahn parameters lambda, a, b must be positive");
  }
}

// (lambda + a)_k and (lambda + b)_k appear as denominators for k < n.
void require_mod_cdh(int n, double lambda, double a, double b) {
  for (int j = 0; j < n; ++j) {
    if (lambda + a + j == 0.0 || lambda + b + j == 0.0) {
      throw ParameterError("modified dual Hahn: Pochhammer denominator vanishes at k = " + std::to_string(j + 1));
    }
  }
}

// Generic forward sweep for the dual Hahn pair. `sign_y_sq` = +1 gives S,
// -1 gives the modified family.
template <typename T>
double dual_hahn_recurrence(int n, double lambda, double y_sq, double a, double b) {
  const T l(lambda);
  const T ysq(y_sq);
  T prev = 0;
  T cur = 1;
  for (int k = 0; k < n; ++k) {
    const T up = (k + l + a) * (k + l + b);
    const T down = k * (k + T(a) + b - 1);
    if (up == 0) {
      throw NumericalError("dual Hahn recurrence: zero leading coefficient at n = " + std::to_string(k));
    }
    const T next = ((up + down - l * l - ysq) * cur - down * prev) / up;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

// 3F2(-n, l + iy, l - iy; l + a, l + b; 1) where (l+iy)_k (l-iy)_k is
// written through y^2 so both real and imaginary y are covered.
double dual_hahn_series(int n, double lambda, double y_sq, double a, double b) {
  const RealHP l(lambda);
  const RealHP ysq(y_sq);
  RealHP term = 1;
  RealHP sum = 1;
  for (int k = 0; k < n; ++k) {
    const RealHP lk = l + k;
    term *= RealHP(k - n) * (lk * lk + ysq) / ((RealHP(lambda + a) + k) * (RealHP(lambda + b) + k) * (k + 1));
    sum += term;
  }
  return static_cast<double>(sum);
}

}  // namespace

// Laguerre --------------------------------------------------------------------

std::vector<double> laguerre_sequence(int n_max, double nu, double x) {
  require_order(n_max);
  require_laguerre(nu);
  if (x < 0.0) {
    throw ParameterError("Laguerre argument must be non-negative");
  }
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max >= 1) {
    out[1] = nu + 1.0 - x;
  }
  for (int k = 1; k < n_max; ++k) {
    out[k + 1] = ((2.0 * k + nu + 1.0 - x) * out[k] - (k + nu) * out[k - 1]) / (k + 1.0);
  }
  return out;
}

double laguerre_eval(int n, double nu, double x) { return laguerre_sequence(n, nu, x).back(); }

double laguerre_series(int n, double nu, double x) {
  require_order(n);
  require_laguerre(nu);
  if (x < 0.0) {
    throw ParameterError("Laguerre argument must be non-negative");
  }
  const RealHP v(nu);
  const RealHP z(x);
  RealHP prefactor = 1;  // Gamma(n+nu+1) / (Gamma(n+1) Gamma(nu+1))
  for (int j = 1; j <= n; ++j) {
    prefactor *= (v + j) / j;
  }
  RealHP term = 1;
  RealHP sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= RealHP(k - n) * z / ((v + 1 + k) * (k + 1));
    sum += term;
  }
  return static_cast<double>(prefactor * sum);
}

double laguerre_deriv(int n, double nu, double x) {
  require_order(n);
  require_laguerre(nu);
  if (x < 0.0) {
    throw ParameterError("Laguerre argument must be non-negative");
  }
  if (n == 0) {
    return 0.0;
  }
  if (x == 0.0) {
    double limit = 1.0;  // Gamma(n+nu+1) / (Gamma(n) Gamma(nu+2))
    for (int j = 1; j < n; ++j) {
      limit *= (nu + 1.0 + j) / j;
    }
    return -limit;
  }
  const auto seq = laguerre_sequence(n, nu, x);
  return (n * seq[n] - (n + nu) * seq[n - 1]) / x;
}

double laguerre_deriv2(int n, double nu, double x) {
  require_order(n);
  require_laguerre(nu);
  if (x < 0.0) {
    throw ParameterError("Laguerre argument must be non-negative");
  }
  if (n < 2) {
    return 0.0;
  }
  if (x == 0.0) {
    double limit = 1.0;  // Gamma(n+nu+1) / (Gamma(n-1) Gamma(nu+3))
    for (int j = 1; j <= n - 2; ++j) {
      limit *= (nu + 2.0 + j) / j;
    }
    return limit;
  }
  return ((n - 1) * laguerre_deriv(n, nu, x) - (n + nu) * laguerre_deriv(n - 1, nu, x)) / x;
}

// Meixner-Pollaczek -------------------------------------------------------------

double mp_eval(int n, double lambda, double y, double theta) {
  require_order(n);
  require_mp(lambda, theta);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = (2.0 * ((k + lambda) * c + y * s) * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double mp_series(int n, double lambda, double y, double theta) {
  require_order(n);
  require_mp(lambda, theta);
  const RealHP l(lambda);
  const RealHP t(theta);
  const ComplexHP z{1 - cos(2 * t), sin(2 * t)};  // 1 - exp(-2 i theta)
  ComplexHP term{1, 0};
  ComplexHP sum{1, 0};
  for (int k = 0; k < n; ++k) {
    const ComplexHP rising{l + k, RealHP(y)};
    term = term * rising * z * (RealHP(k - n) / ((2 * l + k) * (k + 1)));
    sum = sum + term;
  }
  RealHP prefactor = 1;  // Gamma(n + 2l) / (Gamma(n+1) Gamma(2l))
  for (int j = 1; j <= n; ++j) {
    prefactor *= (2 * l + j - 1) / j;
  }
  const ComplexHP phase{cos(n * t), sin(n * t)};
  return static_cast<double>((phase * sum).re * prefactor);
}

double log_abs_gamma(double x, double y) {
  if (!(x > 0.0)) {
    throw ParameterError("log_abs_gamma requires a positive real part");
  }
  double shift_sum = 0.0;
  double re = x;
  while (re < 15.0) {
    shift_sum += 0.5 * std::log(re * re + y * y);
    re += 1.0;
  }
  const std::complex<double> z(re, y);
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  const std::complex<double> series =
      inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0))));
  const std::complex<double> stirling = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
  return stirling.real() - shift_sum;
}

double mp_weight(double lambda, double y, double theta) {
  require_mp(lambda, theta);
  const double log_w = -std::log(2.0 * std::numbers::pi) + 2.0 * lambda * std::log(2.0 * std::sin(theta)) +
                       (2.0 * theta - std::numbers::pi) * y + 2.0 * log_abs_gamma(lambda, y);
  return std::exp(log_w);
}

double hyp_mp_eval(int n, double lambda, double y, double theta) {
  require_order(n);
  if (!(lambda > 0.0)) {
    throw ParameterError("hyperbolic Meixner-Pollaczek lambda must be positive");
  }
  // minimal-solution regime (y sinh(theta) < 0) needs the extra digits
  const RealHP t(theta);
  const RealHP c = cosh(t);
  const RealHP s = sinh(t);
  const RealHP l(lambda);
  RealHP prev = 0;
  RealHP cur = 1;
  for (int k = 0; k < n; ++k) {
    const RealHP next = (2 * ((k + l) * c + RealHP(y) * s) * cur - (k + 2 * l - 1) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double hyp_mp_series(int n, double lambda, double y, double theta) {
  require_order(n);
  if (!(lambda > 0.0)) {
    throw ParameterError("hyperbolic Meixner-Pollaczek lambda must be positive");
  }
  const RealHP l(lambda);
  const RealHP t(theta);
  const RealHP z = 1 - exp(2 * t);
  RealHP term = 1;
  RealHP sum = 1;
  for (int k = 0; k < n; ++k) {
    term *= RealHP(k - n) * (l + RealHP(y) + k) * z / ((2 * l + k) * (k + 1));
    sum += term;
  }
  RealHP prefactor = 1;
  for (int j = 1; j <= n; ++j) {
    prefactor *= (2 * l + j - 1) / j;
  }
  return static_cast<double>(prefactor * exp(-n * t) * sum);
}

// Continuous dual Hahn ----------------------------------------------------------

double cdh_eval(int n, double lambda, double y_sq, double a, double b) {
  require_order(n);
  require_cdh(lambda, y_sq, a, b);
  return dual_hahn_recurrence<double>(n, lambda, y_sq, a, b);
}

double cdh_series(int n, double lambda, double y_sq, double a, double b) {
  require_order(n);
  require_cdh(lambda, y_sq, a, b);
  return dual_hahn_series(n, lambda, y_sq, a, b);
}

double cdh_weight(double lambda, double y, double a, double b) {
  require_cdh(lambda, y * y, a, b);
  const double t = std::abs(y);
  if (t == 0.0) {
    return 0.0;
  }
  // |1 / Gamma(2iy)|^2 = 2 y sinh(2 pi y) / pi
  const double two_pi_t = 2.0 * std::numbers::pi * t;
  const double log_sinh = two_pi_t + std::log(-std::expm1(-2.0 * two_pi_t) / 2.0);
  const double log_w = -std::log(2.0 * std::numbers::pi) +
                       2.0 * (log_abs_gamma(lambda, y) + log_abs_gamma(a, y) + log_abs_gamma(b, y) -
                              std::lgamma(lambda + a) - std::lgamma(lambda + b)) +
                       std::log(2.0 * t / std::numbers::pi) + log_sinh;
  return std::exp(log_w);
}

double mod_cdh_eval_sq(int n, double lambda, double y_sq, double a, double b) {
  require_order(n);
  require_mod_cdh(n, lambda, a, b);
  // the continued family is not orthogonal on a positive measure and its
  // polynomial can be the minimal solution, so the sweep runs in Real
  return dual_hahn_recurrence<RealHP>(n, lambda, -y_sq, a, b);
}

double mod_cdh_series_sq(int n, double lambda, double y_sq, double a, double b) {
  require_order(n);
  require_mod_cdh(n, lambda, a, b);
  return dual_hahn_series(n, lambda, -y_sq, a, b);
}

double mod_cdh_eval(int n, double lambda, double y, double a, double b) {
  return mod_cdh_eval_sq(n, lambda, y * y, a, b);
}

double mod_cdh_series(int n, double lambda, double y, double a, double b) {
  return mod_cdh_series_sq(n, lambda, y * y, a, b);
}

// Dispatch ----------------------------------------------------------------------

double evaluate(const PolyParams& p) {
  switch (p.family) {
    case PolyFamily::Laguerre:
      return laguerre_eval(p.n, p.nu, p.y);
    case PolyFamily::MeixnerPollaczek:
      return mp_eval(p.n, p.lambda, p.y, p.theta);
    case PolyFamily::HyperbolicMP:
      return hyp_mp_eval(p.n, p.lambda, p.y, p.theta);
    case PolyFamily::ContinuousDualHahn:
      return cdh_eval(p.n, p.lambda, p.y, p.a, p.b);
    case PolyFamily::ModifiedCDH:
      return mod_cdh_eval(p.n, p.lambda, p.y, p.a, p.b);
  }
  throw ParameterError("unknown polynomial family");
}

double evaluate_series(const PolyParams& p) {
  switch (p.family) {
    case PolyFamily::Laguerre:
      return laguerre_series(p.n, p.nu, p.y);
    case PolyFamily::MeixnerPollaczek:
      return mp_series(p.n, p.lambda, p.y, p.theta);
    case PolyFamily::HyperbolicMP:
      return hyp_mp_series(p.n, p.lambda, p.y, p.theta);
    case PolyFamily::ContinuousDualHahn:
      return cdh_series(p.n, p.lambda, p.y, p.a, p.b);
    case PolyFamily::ModifiedCDH:
      return mod_cdh_series(p.n, p.lambda, p.y, p.a, p.b);
  }
  throw ParameterError("unknown polynomial family");
}

double sqrt_gamma_ratio(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) {
    throw ParameterError("gamma ratio requires positive arguments");
  }
  return std::exp(0.5 * (std::lgamma(a) - std::lgamma(b)));
}

}  // namespace tridirac
