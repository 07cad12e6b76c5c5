#include "tridirac/basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tridirac/errors.hpp"
#include "tridirac/orthopoly.hpp"

namespace tridirac {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void require_positive_r(double r) {
  if (!(r > 0.0)) {
    throw ParameterError("radial coordinate must be positive, got r = " + fmt(r));
  }
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

void PhysicalParams::validate() const {
  if (mu == 0.0) {
    throw ParameterError("mu = 0 is the Dirac-Coulomb type problem (A = Z/kappa); excluded");
  }
  if (mu == 1.0) {
    throw ParameterError("mu = 1 is the free Dirac particle (absorb A by kappa -> kappa + A); excluded");
  }
  if (mu == -1.0) {
    throw ParameterError("mu = -1 is the Dirac oscillator; excluded");
  }
  if (!std::isfinite(mu)) {
    throw ParameterError("mu must be finite");
  }
  if (A == 0.0 || !std::isfinite(A)) {
    throw ParameterError("potential strength A must be finite and nonzero");
  }
  if (kappa == 0) {
    throw ParameterError("spin-orbit number kappa = +-(j+1/2) cannot be zero");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("Compton wavelength lambda must be positive");
  }
  if (epsilon != 1 && epsilon != -1) {
    throw ParameterError("energy must be the rest-mass value epsilon = +1 or -1");
  }
}

std::string to_string(Representation rep) {
  switch (rep) {
    case Representation::A:
      return "A";
    case Representation::B:
      return "B";
    case Representation::C:
      return "C";
  }
  return "?";
}

double BasisParams::x_of_r(double r) const {
  require_positive_r(r);
  return std::exp(beta * std::log(omega * r));
}

double BasisParams::norm_const(int n) const {
  return std::sqrt(omega * std::abs(beta)) * std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + nu + 1.0)));
}

BasisParams select_representation(const PhysicalParams& phys, const BasisOptions& options) {
  phys.validate();
  BasisParams b;
  b.beta = phys.beta();
  b.kappa = phys.kappa;
  b.A = phys.A;
  b.lambda = phys.lambda;
  const double bk = b.beta * phys.kappa;

  Representation rep;
  if (options.representation) {
    rep = *options.representation;
    if (rep == Representation::A && !(bk > 0.0 && phys.kappa != -1)) {
      throw ParameterError("representation A needs beta*kappa > 0 and kappa != -1");
    }
    if (rep == Representation::B && !(bk < 0.0)) {
      throw ParameterError("representation B needs beta*kappa < 0");
    }
  } else if (bk > 0.0 && phys.kappa != -1) {
    rep = Representation::A;
  } else if (bk < 0.0) {
    rep = Representation::B;
  } else {
    rep = Representation::C;
  }
  b.rep = rep;
  b.tau = options.tau.value_or(0.25);

  if (rep == Representation::C) {
    const double sign = (b.beta * phys.A > 0.0) ? 1.0 : -1.0;
    b.rho = sign;
    b.omega = std::pow(std::abs(2.0 * phys.A / b.beta), 1.0 / b.beta);
    if (options.omega && !near(*options.omega, b.omega)) {
      throw ParameterError("representation C fixes omega = |2A/beta|^{1/beta} = " + fmt(b.omega));
    }
    if (options.rho && *options.rho != sign) {
      throw ParameterError("representation C fixes rho = sign(beta A) = " + fmt(sign));
    }
    b.gamma = options.gamma.value_or(phys.kappa / b.beta);
    if (options.alpha) {
      b.alpha = *options.alpha;
    } else {
      b.alpha = 1.0 + std::max(0.0, 1.0 / b.beta);
      if (b.beta < 0.0 && !(b.alpha > -0.5 / b.beta)) {
        b.alpha = 1.0 - 0.5 / b.beta;
      }
    }
    b.nu = 2.0 * b.alpha - 1.0 - 1.0 / b.beta;
  } else {
    if (options.gamma) {
      throw ParameterError("gamma is fixed to kappa/beta in representations A and B");
    }
    if (options.alpha) {
      throw ParameterError("alpha is fixed by kappa and beta in representations A and B");
    }
    b.gamma = phys.kappa / b.beta;
    if (rep == Representation::A) {
      b.alpha = (phys.kappa + 1.0) / b.beta;
      b.nu = (2.0 * phys.kappa + 1.0) / b.beta;
    } else {
      b.alpha = -phys.kappa / b.beta;
      b.nu = -(2.0 * phys.kappa + 1.0) / b.beta;
    }
    b.omega = options.omega.value_or(std::pow(std::abs(phys.A / b.beta), 1.0 / b.beta));
    if (!(b.omega > 0.0) || !std::isfinite(b.omega)) {
      throw ParameterError("omega must be positive and finite");
    }
    b.rho = options.rho.value_or(2.0 * phys.A / (b.beta * std::pow(b.omega, b.beta)));
    if (std::abs(b.rho) == 1.0 || near(std::abs(b.rho), 1.0)) {
      throw ParameterError("rho^2 = 1 makes the A/B recursion degenerate; use representation C (rho = +-1)");
    }
  }
  const double rho_kb = 2.0 * phys.A / (b.beta * std::pow(b.omega, b.beta));
  b.kinetic_balance = b.tau == 0.25 && near(b.rho, rho_kb) && near(b.gamma, phys.kappa / b.beta);
  check_table(b);
  return b;
}

void check_table(const BasisParams& b) {
  const std::string tag = "representation " + to_string(b.rep) + ": ";
  const double nu_min = (b.rep == Representation::A) ? 0.0 : -1.0;
  if (!(b.nu > nu_min)) {
    throw ParameterError(tag + "nu = " + fmt(b.nu) + " must exceed " + fmt(nu_min));
  }
  if (!(b.alpha > 0.0)) {
    throw ParameterError(tag + "alpha = " + fmt(b.alpha) + " must be positive");
  }
  double bound = 0.0;
  if (b.beta < 0.0) {
    bound = -0.5 / b.beta;
  } else if (b.rep == Representation::B) {
    bound = (b.beta < 1.0) ? -1.0 + 1.0 / b.beta : 0.0;
  } else {
    bound = 1.0 / b.beta;
  }
  if (!(b.alpha > bound)) {
    throw ParameterError(tag + "alpha = " + fmt(b.alpha) + " must exceed " + fmt(bound) + " for beta = " + fmt(b.beta));
  }
}

RadialFunction upper_component(const BasisParams& b, int n) {
  RadialFunction f(b.alpha);
  f.terms.push_back({b.norm_const(n), 0, n, b.nu});
  return f;
}

RadialFunction lower_component(const BasisParams& b, int n, LowerForm form) {
  const double c = b.lambda * b.omega * b.tau * b.beta * b.norm_const(n);
  const double nu = b.nu;
  const double rho = b.rho;
  RadialFunction f(b.alpha - 1.0 / b.beta);
  if (form == LowerForm::General) {
    f.terms.push_back({2.0 * c * ((b.gamma + b.alpha - 0.5 * (nu + 1.0)) + rho * (n + 0.5 * (nu + 1.0))), 0, n, nu});
    f.terms.push_back({-c * (1.0 + rho) * (n + nu), 0, n - 1, nu});
    f.terms.push_back({c * (1.0 - rho) * (n + 1.0), 0, n + 1, nu});
    return f.compact();
  }
  switch (b.rep) {
    case Representation::A:
      f.terms.push_back({2.0 * c * (b.gamma + b.alpha - nu), 0, n, nu});
      f.terms.push_back({c * (1.0 + rho) * (n + nu), 0, n, nu - 1.0});
      f.terms.push_back({c * (1.0 - rho) * (n + 1.0), 0, n + 1, nu - 1.0});
      break;
    case Representation::B:
      f.terms.push_back({2.0 * c * (b.gamma + b.alpha), 0, n, nu});
      f.terms.push_back({-c * (1.0 - rho), 1, n, nu + 1.0});
      f.terms.push_back({-c * (1.0 + rho), 1, n - 1, nu + 1.0});
      break;
    case Representation::C:
      f.terms.push_back({c * ((2.0 * b.gamma + 1.0 / b.beta) + rho * (2.0 * n + nu + 1.0)), 0, n, nu});
      f.terms.push_back({-c * (1.0 + rho) * (n + nu), 0, n - 1, nu});
      f.terms.push_back({c * (1.0 - rho) * (n + 1.0), 0, n + 1, nu});
      break;
  }
  return f.compact();
}

RadialFunction kinetic_balance_operator(const BasisParams& b, const RadialFunction& upper) {
  RadialFunction out = upper.scaled(b.gamma);
  out += upper.times_x().scaled(0.5 * b.rho);
  out += upper.derivative().times_x();
  return out.times_power(-1.0 / b.beta).scaled(2.0 * b.lambda * b.omega * b.tau * b.beta).compact();
}

double phi_plus(const BasisParams& b, int n, double r) {
  const double x = b.x_of_r(r);
  return b.norm_const(n) * std::exp(b.alpha * std::log(x) - 0.5 * x) * laguerre_eval(n, b.nu, x);
}

double phi_minus(const BasisParams& b, int n, double r) {
  const double x = b.x_of_r(r);
  return lower_component(b, n).value(x);
}

double kinetic_balance_apply(const BasisParams& b, int n, double r) {
  const double x = b.x_of_r(r);
  const double env = b.norm_const(n) * std::exp(b.alpha * std::log(x) - 0.5 * x);
  const double l = laguerre_eval(n, b.nu, x);
  const double dl = laguerre_deriv(n, b.nu, x);
  const double phi = env * l;
  const double x_dphi = env * ((b.alpha - 0.5 * x) * l + x * dl);
  return 2.0 * b.lambda * b.omega * b.tau * b.beta * std::exp(-std::log(x) / b.beta) *
         ((b.gamma + 0.5 * b.rho * x) * phi + x_dphi);
}

double kinetic_balance_physical(const BasisParams& b, int n, double r) {
  const double x = b.x_of_r(r);
  const double env = b.norm_const(n) * std::exp(b.alpha * std::log(x) - 0.5 * x);
  const double l = laguerre_eval(n, b.nu, x);
  const double dl = laguerre_deriv(n, b.nu, x);
  const double phi = env * l;
  const double dphi_dx = env * ((b.alpha / x - 0.5) * l + dl);
  const double dphi_dr = dphi_dx * b.beta * x / r;
  const double mu = 1.0 - b.beta;
  return 0.5 * b.lambda * ((b.kappa / r + b.A / std::pow(r, mu)) * phi + dphi_dr);
}

double radial_overlap(const RadialFunction& u, const RadialFunction& v, const RadialMeasure& measure,
                      double extra_power, int min_order) {
  if (u.empty() || v.empty()) {
    return 0.0;
  }
  const double s = u.power + v.power + extra_power + measure.jacobian_power();
  if (!(s > -1.0)) {
    throw NumericalError("overlap integrand x^" + fmt(s) + " e^{-x} is not integrable at the origin");
  }
  const int order = std::max(min_order, (u.degree() + v.degree()) / 2 + 1);
  const QuadratureRule rule = gauss_laguerre(order, s);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    const double x = rule.nodes[i];
    const double term = rule.weights[i] * u.poly(x) * v.poly(x);
    if (!std::isfinite(term)) {
      throw NumericalError("overlap: non-finite integrand at x = " + fmt(x));
    }
    sum += term;
  }
  return measure.prefactor() * sum;
}

}  // namespace tridirac
