#include "tridirac/dirac_operator.hpp"

#include <cmath>
#include <cstdlib>

#include "tridirac/errors.hpp"

namespace tridirac {

DerivedParams derived_params(const BasisParams& b) {
  DerivedParams d;
  d.p = b.beta * (1.0 - 2.0 * b.tau);
  d.q = b.A / std::pow(b.omega, b.beta) - 0.5 * b.beta * b.rho;
  if (d.p == 0.0) {
    throw ParameterError("tau = 1/2 gives p = 0; the recursion parameters q/p are undefined");
  }
  const double qp = d.q / d.p;
  d.sigma_plus = (b.rho + qp) * (b.rho + qp) - qp * qp + 1.0;
  d.sigma_minus = (b.rho + qp) * (b.rho + qp) - qp * qp - 1.0;
  d.zeta = ((2.0 * b.kappa + 1.0) / b.beta - 1.0) * (b.rho + qp);

  d.u = b.rho * (b.kappa - b.beta * b.gamma);
  d.z = b.gamma + 0.5 / b.beta;
  d.d = b.alpha + b.rho * b.gamma - 0.5 * (b.rho + 1.0) + 0.5 * (b.rho - 1.0) / b.beta + 0.5 * d.u / d.p;
  d.y_sq = d.z * (d.z + b.rho * d.u / d.p);

  if (b.rep == Representation::C) {
    return d;
  }
  const double sign_kb = (b.rep == Representation::A) ? 1.0 : -1.0;
  d.lambda_mp = sign_kb * (b.kappa + 0.5) / b.beta + 0.5;
  if (d.sigma_minus == 0.0 || std::abs(b.rho * b.rho - 1.0) < 1e-14) {
    throw ParameterError("rho^2 = 1 makes the A/B recursion degenerate; use representation C");
  }
  if (b.kinetic_balance) {
    const double r2 = b.rho * b.rho;
    d.theta = std::asinh(2.0 * b.rho / (r2 - 1.0));
    const double y = (b.kappa + 0.5) / b.beta - 0.5;
    d.family = PolyFamily::HyperbolicMP;
    d.sign = r2 > 1.0 ? 1 : -1;
    d.y = r2 > 1.0 ? y : -y;
    return d;
  }
  // 2[(n+l) S + Z] g_n - (n+2l-1) g_{n-1} - (n+1) g_{n+1} = 0
  const double s = d.sigma_plus / d.sigma_minus;
  const double zz = d.zeta / d.sigma_minus;
  if (std::abs(s) > 1.0) {
    d.family = PolyFamily::HyperbolicMP;
    d.theta = std::acosh(std::abs(s));
    d.sign = s > 0.0 ? 1 : -1;
    d.y = d.sign * zz / std::sinh(d.theta);
  } else if (std::abs(s) < 1.0) {
    d.family = PolyFamily::MeixnerPollaczek;
    d.theta = std::acos(s);
    d.sign = 1;
    d.y = zz / std::sin(d.theta);
  } else {
    throw ParameterError("sigma+ = +-sigma- leaves the recursion without a Meixner-Pollaczek form");
  }
  return d;
}

double matrix_element_analytic(const BasisParams& b, const DerivedParams& d, int n, int m) {
  if (std::abs(n - m) >= 2) {
    return 0.0;
  }
  const double p = d.p;
  const double q = d.q;
  const double rho = b.rho;
  const double pref = b.lambda * b.lambda * b.omega * b.omega * b.beta * b.tau;
  const double k2 = (2.0 * b.kappa + 1.0) / b.beta;
  if (b.rep == Representation::A || b.rep == Representation::B) {
    const double nu_rep = (b.rep == Representation::A) ? k2 : -k2;
    if (n == m) {
      return pref * ((2.0 * n + 1.0 + nu_rep) * (p * (rho * rho + 1.0) + 2.0 * q * rho) + 2.0 * (k2 - 1.0) * (p * rho + q));
    }
    const int k = std::max(n, m);
    return -pref * (p * (rho * rho - 1.0) + 2.0 * q * rho) * std::sqrt(k * (k + nu_rep));
  }
  const double pref4 = 4.0 * pref;
  if (n == m) {
    const double e1 = n + b.alpha + rho * b.gamma + 0.5 * (rho - 1.0) / b.beta;
    const double e2 = n + b.alpha - 0.5 * rho - 0.5 / b.beta;
    return pref4 * (p * (e1 * e1 + e2 * e2 - 0.25 * b.nu * b.nu) + d.u * e1);
  }
  const int k = std::max(n, m);
  const double e = k + b.alpha + rho * b.gamma - 0.5 * (rho + 1.0) + 0.5 * (rho - 1.0) / b.beta;
  return -pref4 * (p * e + 0.5 * d.u) * std::sqrt(k * (k + b.nu));
}

double matrix_element_numeric(const BasisParams& b, int n, int m, int epsilon, int min_order) {
  const RadialMeasure measure = b.measure();
  const double q = b.A / std::pow(b.omega, b.beta) - 0.5 * b.beta * b.rho;
  const RadialFunction un = upper_component(b, n);
  const RadialFunction um = upper_component(b, m);
  const RadialFunction vn = lower_component(b, n);
  const RadialFunction vm = lower_component(b, m);

  auto coupling = [&](const RadialFunction& v) {
    double k = b.kappa - b.beta * b.gamma;
    if (std::abs(k) < 1e-13 * std::abs(b.kappa)) {
      k = 0.0;  // gamma = kappa/beta up to rounding
    }
    RadialFunction w = v.scaled(k);
    w += v.times_x().scaled(q);
    return w.times_power(-1.0 / b.beta).compact();
  };

  double total = 0.0;
  if (epsilon != 1) {
    total += (1.0 - epsilon) * radial_overlap(un, um, measure, 0.0, min_order);
  }
  total -= (1.0 + epsilon - 1.0 / b.tau) * radial_overlap(vn, vm, measure, 0.0, min_order);
  total += b.lambda * b.omega *
           (radial_overlap(un, coupling(vm), measure, 0.0, min_order) +
            radial_overlap(um, coupling(vn), measure, 0.0, min_order));
  return total;
}

double TridiagonalOperator::element(int n, int m) const {
  if (n == m) {
    return diag.at(n);
  }
  if (std::abs(n - m) == 1) {
    return offdiag.at(std::min(n, m));
  }
  return 0.0;
}

TridiagonalOperator build_operator(const BasisParams& b, const DerivedParams& d, int N) {
  if (N < 1) {
    throw ParameterError("operator truncation N must be at least 1");
  }
  TridiagonalOperator op;
  op.diag.resize(N + 1);
  op.offdiag.resize(N);
  for (int n = 0; n <= N; ++n) {
    op.diag[n] = matrix_element_analytic(b, d, n, n);
    if (n < N) {
      op.offdiag[n] = matrix_element_analytic(b, d, n + 1, n);
    }
  }
  return op;
}

DiracImage apply_dirac(const PhysicalParams& phys, const RadialMeasure& measure, const RadialFunction& upper,
                       const RadialFunction& lower) {
  const double beta = measure.beta;
  const double c = phys.lambda * measure.omega;
  const double a_eff = phys.A * std::pow(measure.omega, -beta);
  const double inv = -1.0 / beta;

  DiracImage img;
  img.mass_plus = upper.scaled(1.0 - phys.epsilon).compact();
  img.potential_plus = (lower.scaled(phys.kappa) + lower.times_x().scaled(a_eff)).times_power(inv).scaled(c).compact();
  img.derivative_plus = lower.derivative().times_x().times_power(inv).scaled(-c * beta).compact();
  img.row_plus = (img.mass_plus + img.potential_plus + img.derivative_plus).compact();

  img.potential_minus = (upper.scaled(phys.kappa) + upper.times_x().scaled(a_eff)).times_power(inv).scaled(c).compact();
  img.derivative_minus = upper.derivative().times_x().times_power(inv).scaled(c * beta).compact();
  img.mass_minus = lower.scaled(-(1.0 + phys.epsilon)).compact();
  img.row_minus = (img.mass_minus + img.potential_minus + img.derivative_minus).compact();
  return img;
}

SecondOrderImage apply_second_order(const PhysicalParams& phys, const RadialMeasure& measure, const RadialFunction& f,
                                    int component) {
  if (component != 1 && component != -1) {
    throw ParameterError("component must be +1 (upper) or -1 (lower)");
  }
  const double beta = measure.beta;
  const double w2 = measure.omega * measure.omega;
  const double a_eff = phys.A * std::pow(measure.omega, -beta);
  const double k = phys.kappa;
  const double s = component;

  // d^2/dr^2 = omega^2 x^{-2/beta} beta^2 [(1 - 1/beta) x d/dx + x^2 d^2/dx^2]
  const RadialFunction f1 = f.derivative();
  const RadialFunction f2 = f1.derivative();
  SecondOrderImage img;
  img.derivative = (f1.times_x().scaled(1.0 - 1.0 / beta) + f2.times_x(2))
                       .times_power(-2.0 / beta)
                       .scaled(w2 * beta * beta)
                       .compact();
  img.potential = (f.scaled(k * (k + s)) + f.times_x(2).scaled(a_eff * a_eff) +
                   f.times_x().scaled(phys.A * (2.0 * k + s * phys.mu) * std::pow(measure.omega, -beta)))
                      .times_power(-2.0 / beta)
                      .scaled(w2)
                      .compact();
  img.total = (img.derivative.scaled(-1.0) + img.potential).compact();
  return img;
}

}  // namespace tridirac
