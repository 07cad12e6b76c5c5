#include "tridirac/recursion.hpp"

#include <cmath>
#include <string>

#include "tridirac/errors.hpp"
#include "tridirac/orthopoly.hpp"

namespace tridirac {

namespace {

// log of sqrt(Gamma(n+1+nu) / n!)
double log_g_factor(int n, double nu) {
  if (!(n + 1.0 + nu > 0.0)) {
    throw ParameterError("rescaling needs n + 1 + nu > 0, got nu = " + std::to_string(nu));
  }
  return 0.5 * (std::lgamma(n + 1.0 + nu) - std::lgamma(n + 1.0));
}

}  // namespace

double ThreeTermRecursion::residual(const std::vector<double>& s, int n) const {
  const Real prev = n >= 1 ? Real(s.at(n - 1)) : Real(0);
  return static_cast<double>(a(n) * s.at(n) + b(n) * prev + c(n) * s.at(n + 1));
}

double ThreeTermRecursion::magnitude(const std::vector<double>& s, int n) const {
  const Real prev = n >= 1 ? Real(s.at(n - 1)) : Real(0);
  return static_cast<double>(abs(a(n) * s.at(n)) + abs(b(n) * prev) + abs(c(n) * s.at(n + 1)));
}

ThreeTermRecursion build_recursion(const BasisParams& basis, const DerivedParams& d) {
  ThreeTermRecursion rec;
  const double nu = basis.nu;
  rec.nu = nu;
  if (basis.rep == Representation::C) {
    // same (lambda, a, b) the closed form receives
    rec.scaling = Scaling::H;
    const Real v(nu);
    const Real bb(d.d + 0.5 * (1.0 - nu));
    const Real dd = bb - (1 - v) / 2;
    const Real lam = (v + 1) / 2;
    const Real ysq(d.y_sq);
    rec.a = [=](int n) { return (n + v + 1) * (n + dd + 1) + n * (n + dd) - lam * lam + ysq; };
    rec.b = [=](int n) { return -n * (n + dd); };
    rec.c = [=](int n) { return -(n + v + 1) * (n + dd + 1); };
    return rec;
  }
  rec.scaling = Scaling::G;
  const Real lam(d.lambda_mp);
  const Real theta(d.theta);
  if (basis.kinetic_balance) {
    const Real ch = cosh(theta);
    const Real sh = sinh(theta);
    const Real y((basis.kappa + 0.5) / basis.beta - 0.5);
    if (basis.rho * basis.rho > 1.0) {
      rec.a = [=](int n) { return 2 * ((n + lam) * ch + y * sh); };
      rec.b = [=](int n) { return -(n + 2 * lam - 1); };
      rec.c = [=](int n) { return -Real(n + 1); };
    } else {
      rec.a = [=](int n) { return 2 * ((n + lam) * ch - y * sh); };
      rec.b = [=](int n) { return n + 2 * lam - 1; };
      rec.c = [=](int n) { return Real(n + 1); };
    }
    return rec;
  }
  // sigma+/sigma- and zeta/sigma- through the (theta, y) the closed form uses
  const Real y(d.y);
  Real s;
  Real z;
  if (d.family == PolyFamily::HyperbolicMP) {
    s = d.sign * cosh(theta);
    z = d.sign * y * sinh(theta);
  } else {
    s = cos(theta);
    z = y * sin(theta);
  }
  rec.a = [=](int n) { return 2 * ((n + lam) * s + z); };
  rec.b = [=](int n) { return -(n + 2 * lam - 1); };
  rec.c = [=](int n) { return -Real(n + 1); };
  return rec;
}

ThreeTermRecursion build_f_recursion(const BasisParams& basis, const DerivedParams& d) {
  ThreeTermRecursion rec;
  rec.scaling = Scaling::F;
  const double nu = basis.nu;
  rec.nu = nu;
  const Real v(nu);
  if (basis.rep == Representation::C) {
    const Real dd(d.d);
    const Real lam2 = (v + 1) * (v + 1) / 4;
    const Real ysq(d.y_sq);
    rec.a = [=](int n) { return (n + v + 1) * (n + dd + 1) + n * (n + dd) - lam2 + ysq; };
    rec.b = [=](int n) { return -(n + dd) * sqrt(n * (n + v)); };
    rec.c = [=](int n) { return -(n + dd + 1) * sqrt((n + 1) * (n + 1 + v)); };
    return rec;
  }
  const Real rho(basis.rho);
  const Real qp = Real(d.q) / d.p;
  const Real k2 = (2 * Real(basis.kappa) + 1) / basis.beta;
  const Real diag_factor = rho * rho + 1 + 2 * rho * qp;
  const Real off_factor = rho * rho - 1 + 2 * rho * qp;
  rec.a = [=](int n) { return (2 * n + 1 + v) * diag_factor + 2 * (k2 - 1) * (rho + qp); };
  rec.b = [=](int n) { return -off_factor * sqrt(n * (n + v)); };
  rec.c = [=](int n) { return -off_factor * sqrt((n + 1) * (n + 1 + v)); };
  return rec;
}

ThreeTermRecursion operator_recursion(const TridiagonalOperator& op) {
  ThreeTermRecursion rec;
  rec.scaling = Scaling::F;
  const int size = op.size();
  rec.a = [op](int n) { return Real(op.diag.at(n)); };
  rec.b = [op](int n) { return n >= 1 ? Real(op.offdiag.at(n - 1)) : Real(0); };
  rec.c = [op, size](int n) {
    if (n + 1 >= size) {
      throw ParameterError("operator recursion used beyond its truncation");
    }
    return Real(op.offdiag.at(n));
  };
  return rec;
}

CoefficientSequence solve_forward(const ThreeTermRecursion& rec, int N) {
  if (N < 0) {
    throw ParameterError("sequence length must be non-negative");
  }
  CoefficientSequence seq;
  seq.scaling = rec.scaling;
  seq.nu = rec.nu;
  seq.values.resize(N + 1);
  Real prev = 0;
  Real cur = 1;
  seq.values[0] = 1.0;
  for (int n = 0; n < N; ++n) {
    const Real c = rec.c(n);
    if (c == 0) {
      throw NumericalError("forward recurrence: c(n) vanishes at n = " + std::to_string(n));
    }
    const Real next = -(rec.a(n) * cur + rec.b(n) * prev) / c;
    prev = cur;
    cur = next;
    seq.values[n + 1] = static_cast<double>(cur);
  }
  return seq;
}

CoefficientSequence closed_form_sequence(const BasisParams& basis, const DerivedParams& d, int N) {
  if (N < 0) {
    throw ParameterError("sequence length must be non-negative");
  }
  CoefficientSequence seq;
  seq.nu = basis.nu;
  seq.values.resize(N + 1);
  if (basis.rep == Representation::C) {
    seq.scaling = Scaling::H;
    const double lam = 0.5 * (basis.nu + 1.0);
    const double b = d.d + 0.5 * (1.0 - basis.nu);
    for (int n = 0; n <= N; ++n) {
      seq.values[n] = mod_cdh_series_sq(n, lam, d.y_sq, lam, b);
    }
    return seq;
  }
  seq.scaling = Scaling::G;
  for (int n = 0; n <= N; ++n) {
    const double sign = (d.sign < 0 && n % 2 == 1) ? -1.0 : 1.0;
    const double p = d.family == PolyFamily::HyperbolicMP ? hyp_mp_series(n, d.lambda_mp, d.y, d.theta)
                                                          : mp_series(n, d.lambda_mp, d.y, d.theta);
    seq.values[n] = sign * p;
  }
  return seq;
}

CoefficientSequence rescale(const CoefficientSequence& seq, Scaling target) {
  CoefficientSequence out = seq;
  out.scaling = target;
  for (int n = 0; n < seq.size(); ++n) {
    double log_to_f = 0.0;  // f = s * exp(log_to_f)
    if (seq.scaling == Scaling::G) {
      log_to_f = -log_g_factor(n, seq.nu);
    } else if (seq.scaling == Scaling::H) {
      log_to_f = log_g_factor(n, seq.nu);
    }
    double log_from_f = 0.0;
    if (target == Scaling::G) {
      log_from_f = log_g_factor(n, seq.nu);
    } else if (target == Scaling::H) {
      log_from_f = -log_g_factor(n, seq.nu);
    }
    out.values[n] = seq.values[n] * std::exp(log_to_f + log_from_f);
  }
  return out;
}

}  // namespace tridirac
