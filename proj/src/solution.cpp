#include "tridirac/solution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tridirac/errors.hpp"
#include "tridirac/orthopoly.hpp"

namespace tridirac {

namespace {

SeriesSolution build_series(const PhysicalParams& phys, const BasisParams& basis, const std::vector<double>& f_with_next,
                            bool mirrored) {
  if (f_with_next.size() < 2) {
    throw ParameterError("series needs at least f_0 and f_1");
  }
  SeriesSolution sol;
  sol.phys = phys;
  sol.basis = basis;
  sol.derived = derived_params(basis);
  sol.N = static_cast<int>(f_with_next.size()) - 2;
  sol.f.assign(f_with_next.begin(), f_with_next.end() - 1);
  sol.f_next = f_with_next.back();
  sol.mirrored = mirrored;

  RadialFunction up;
  RadialFunction low;
  for (int n = 0; n <= sol.N; ++n) {
    auto [u, v] = sol.basis_spinor(n);
    up += u.scaled(sol.f[n]);
    low += v.scaled(sol.f[n]);
  }
  up = up.compact();
  low = low.compact();
  const RadialMeasure measure = basis.measure();
  const double norm2 = radial_overlap(up, up, measure) + radial_overlap(low, low, measure);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
    throw NumericalError("series norm is not positive and finite");
  }
  sol.normalization = 1.0 / std::sqrt(norm2);
  sol.upper = up.scaled(sol.normalization);
  sol.lower = low.scaled(sol.normalization);
  sol.image = apply_dirac(phys, measure, sol.upper, sol.lower);
  return sol;
}

double abs_value(const RadialFunction& f, double x) { return f.empty() ? 0.0 : std::abs(f.value(x)); }

}  // namespace

std::pair<RadialFunction, RadialFunction> SeriesSolution::basis_spinor(int n) const {
  if (mirrored) {
    return {lower_component(basis, n), upper_component(basis, n)};
  }
  return {upper_component(basis, n), lower_component(basis, n)};
}

SeriesSolution assemble(const PhysicalParams& phys, const BasisOptions& options, int N, CoefficientSource source) {
  phys.validate();
  if (N < 0) {
    throw ParameterError("truncation N must be non-negative");
  }
  if (phys.epsilon == -1) {
    return mirror(assemble(mirrored_params(phys), options, N, source));
  }
  const BasisParams basis = select_representation(phys, options);
  const DerivedParams derived = derived_params(basis);
  const CoefficientSequence seq = source == CoefficientSource::ClosedForm
                                      ? closed_form_sequence(basis, derived, N + 1)
                                      : solve_forward(build_recursion(basis, derived), N + 1);
  return build_series(phys, basis, rescale(seq, Scaling::F).values, false);
}

SeriesSolution assemble_from_coefficients(const PhysicalParams& phys, const BasisParams& basis,
                                          const std::vector<double>& f_with_next) {
  return build_series(phys, basis, f_with_next, false);
}

SpinorSample evaluate(const SeriesSolution& sol, double r) {
  const double x = sol.x_of_r(r);
  return {r, sol.upper.value(x), sol.lower.value(x)};
}

DiracResidual dirac_residual(const SeriesSolution& sol, double r) {
  const double x = sol.x_of_r(r);
  const DiracImage& img = sol.image;
  DiracResidual res;
  res.plus = img.row_plus.empty() ? 0.0 : img.row_plus.value(x);
  res.minus = img.row_minus.empty() ? 0.0 : img.row_minus.value(x);
  res.scale_plus = abs_value(img.mass_plus, x) + abs_value(img.potential_plus, x) + abs_value(img.derivative_plus, x);
  res.scale_minus =
      abs_value(img.mass_minus, x) + abs_value(img.potential_minus, x) + abs_value(img.derivative_minus, x);
  return res;
}

SecondOrderResidual second_order_residual(const SeriesSolution& sol, double r, int component) {
  const double x = sol.x_of_r(r);
  const RadialFunction& f = component == 1 ? sol.upper : sol.lower;
  const SecondOrderImage img = apply_second_order(sol.phys, sol.basis.measure(), f, component);
  return {img.total.empty() ? 0.0 : img.total.value(x), abs_value(img.derivative, x) + abs_value(img.potential, x)};
}

std::vector<double> weak_form_residual(const SeriesSolution& sol) {
  const RadialMeasure measure = sol.basis.measure();
  std::vector<double> out(sol.N + 1);
  for (int n = 0; n <= sol.N; ++n) {
    auto [u, v] = sol.basis_spinor(n);
    out[n] = radial_overlap(u, sol.image.row_plus, measure) + radial_overlap(v, sol.image.row_minus, measure);
  }
  return out;
}

double weak_form_boundary(const SeriesSolution& sol) {
  const double b_n = matrix_element_analytic(sol.basis, sol.derived, sol.N + 1, sol.N);
  const double value = -b_n * sol.f_next * sol.normalization;
  return sol.mirrored ? -value : value;
}

std::vector<double> weak_form_scale(const SeriesSolution& sol) {
  const RadialMeasure measure = sol.basis.measure();
  const DiracImage& img = sol.image;
  auto term = [&](const RadialFunction& u, const RadialFunction& t) {
    return t.empty() ? 0.0 : std::abs(radial_overlap(u, t, measure));
  };
  std::vector<double> out(sol.N + 1);
  for (int n = 0; n <= sol.N; ++n) {
    auto [u, v] = sol.basis_spinor(n);
    out[n] = term(u, img.mass_plus) + term(u, img.potential_plus) + term(u, img.derivative_plus) +
             term(v, img.mass_minus) + term(v, img.potential_minus) + term(v, img.derivative_minus);
  }
  return out;
}

double weak_form_boundary_error(const SeriesSolution& sol) {
  const double w = weak_form_residual(sol).back();
  const double expected = weak_form_boundary(sol);
  const double floor = 1e-8 * weak_form_scale(sol).back();
  return std::abs(w - expected) / std::max(std::abs(expected), floor);
}

std::pair<double, double> kinetic_balance_residual(const SeriesSolution& sol, int n, double r) {
  if (!(r > 0.0)) {
    throw ParameterError("kinetic balance needs r > 0");
  }
  const PhysicalParams& phys = sol.phys;
  const double beta = sol.basis.beta;
  const double omega = sol.basis.omega;
  const double x = sol.x_of_r(r);
  auto [u, v] = sol.basis_spinor(n);
  const RadialFunction& source = phys.epsilon == 1 ? u : v;
  const RadialFunction& target = phys.epsilon == 1 ? v : u;
  const double f = source.value(x);
  const double df_dr = omega * beta * std::pow(x, 1.0 - 1.0 / beta) * source.d1(x);
  const double coupling = phys.kappa / r + phys.A / std::pow(r, phys.mu);
  const double image = phys.epsilon == 1 ? 0.5 * phys.lambda * (coupling * f + df_dr)
                                         : -0.5 * phys.lambda * (coupling * f - df_dr);
  const double t = target.value(x);
  return {t - image, std::abs(t)};
}

std::vector<double> report_grid(const BasisParams& basis, int points, double x_min, double x_max) {
  if (points < 2 || !(x_min > 0.0) || !(x_max > x_min)) {
    throw ParameterError("report grid needs at least two points and 0 < x_min < x_max");
  }
  const RadialMeasure measure = basis.measure();
  std::vector<double> grid(points);
  const double lo = std::log(x_min);
  const double hi = std::log(x_max);
  for (int i = 0; i < points; ++i) {
    const double x = std::exp(lo + (hi - lo) * i / (points - 1));
    grid[i] = measure.r_of_x(x);
  }
  std::sort(grid.begin(), grid.end());
  return grid;
}

ResidualStats interior_residual(const SeriesSolution& sol, const std::vector<double>& grid) {
  ResidualStats stats;
  const int size = static_cast<int>(grid.size());
  for (int i = kGridEdge; i < size - kGridEdge; ++i) {
    const DiracResidual res = dirac_residual(sol, grid[i]);
    stats.max_residual = std::max({stats.max_residual, std::abs(res.plus), std::abs(res.minus)});
    stats.max_scale = std::max({stats.max_scale, res.scale_plus, res.scale_minus});
  }
  return stats;
}

std::vector<DiagonalCandidate> scan_diagonal_conditions(const std::vector<double>& betas, int kappa_max, int n_max) {
  std::vector<DiagonalCandidate> found;
  for (double beta : betas) {
    for (int kappa = -kappa_max; kappa <= kappa_max; ++kappa) {
      if (kappa == 0) {
        continue;
      }
      const double bk = beta * kappa;
      const int s = bk > 0.0 ? 1 : -1;
      if (s > 0 && kappa == -1) {
        continue;  // neither A nor B applies
      }
      const double k2 = (2.0 * kappa + 1.0) / beta;
      const double nu_rep = s * k2;
      if (!(nu_rep > (s > 0 ? 0.0 : -1.0))) {
        continue;
      }
      for (double rho : {1.0, -1.0}) {
        for (int n = 0; n <= n_max; ++n) {
          const double lhs = k2 * (rho + s) + 1.0 - rho + 2.0 * n;
          if (std::abs(lhs) < 1e-9) {
            found.push_back({n, rho, kappa, beta});
          }
        }
      }
    }
  }
  return found;
}

DiagonalCase diagonal_special_case(const PhysicalParams& phys) {
  phys.validate();
  const double beta = phys.beta();
  if (!(beta * phys.kappa < 0.0)) {
    throw ParameterError("diagonal case needs beta*kappa < 0");
  }
  if (!(beta * phys.A > 0.0)) {
    throw ParameterError("diagonal case needs beta*A > 0 so that rho = +1 is reachable");
  }
  if (phys.epsilon != 1) {
    throw ParameterError("diagonal case is built at epsilon = +1");
  }
  BasisOptions options;
  options.representation = Representation::C;
  options.alpha = -phys.kappa / beta;
  DiagonalCase out;
  // D_0 = B_0 = 0 leaves f_1 undetermined; the series stops at n = 0
  out.solution = assemble_from_coefficients(phys, select_representation(phys, options), {1.0, 0.0});
  const BasisParams& b = out.solution.basis;
  out.diag0 = matrix_element_analytic(b, out.solution.derived, 0, 0);
  out.offdiag0 = matrix_element_analytic(b, out.solution.derived, 1, 0);
  out.sigma_minus = b.rho * b.rho - 1.0;
  out.legacy_nu = 1.0 / beta - 0.5;
  out.legacy_lambda = std::sqrt(std::pow(b.omega, beta));
  return out;
}

PhysicalParams mirrored_params(const PhysicalParams& phys) {
  PhysicalParams p = phys;
  p.A = -phys.A;
  p.kappa = -phys.kappa;
  p.epsilon = -phys.epsilon;
  return p;
}

SeriesSolution mirror(const SeriesSolution& sol) {
  SeriesSolution out = sol;
  out.phys = mirrored_params(sol.phys);
  out.mirrored = !sol.mirrored;
  std::swap(out.upper, out.lower);
  out.image = apply_dirac(out.phys, out.basis.measure(), out.upper, out.lower);
  return out;
}

SeriesSolution negative_energy_solution(const PhysicalParams& phys, const BasisOptions& options, int N) {
  if (phys.epsilon != -1) {
    throw ParameterError("negative-energy solution needs epsilon = -1");
  }
  return mirror(assemble(mirrored_params(phys), options, N));
}

SeriesSolution negative_energy_direct_c(const PhysicalParams& phys, const BasisOptions& options, int N) {
  if (phys.epsilon != -1) {
    throw ParameterError("negative-energy solution needs epsilon = -1");
  }
  if (options.gamma || options.tau) {
    throw ParameterError("the direct negative-energy form assumes kinetic balance");
  }
  BasisOptions opt = options;
  opt.representation = Representation::C;
  const BasisParams b = select_representation(mirrored_params(phys), opt);
  const double beta = b.beta;
  const double rho = (beta * phys.A > 0.0) ? 1.0 : -1.0;
  const double gamma = -phys.kappa / beta;
  const double nu = b.nu;

  // coefficients: sqrt(Gamma(n+nu+1)/n!) Shat_n^{(nu+1)/2}(y; (nu+1)/2, b_c)
  const double lam = 0.5 * (nu + 1.0);
  const double b_c = rho < 0.0 ? -(2.0 * phys.kappa - 1.0) / (2.0 * beta) : 1.0 + (2.0 * phys.kappa - 1.0) / (2.0 * beta);
  const double y = (phys.kappa - 0.5) / beta;
  std::vector<double> f(N + 2);
  for (int n = 0; n <= N + 1; ++n) {
    f[n] = std::exp(0.5 * (std::lgamma(n + nu + 1.0) - std::lgamma(n + 1.0))) * mod_cdh_series(n, lam, y, lam, b_c);
  }

  RadialFunction up;
  RadialFunction low;
  for (int n = 0; n <= N; ++n) {
    const double a_n = b.norm_const(n);
    const double c = b.lambda * b.omega * b.tau * beta * a_n;
    RadialFunction u(b.alpha - 1.0 / beta);
    u.terms.push_back({c * ((2.0 * gamma + 1.0 / beta) - rho * (2.0 * n + nu + 1.0)), 0, n, nu});
    u.terms.push_back({c * (rho - 1.0) * (n + nu), 0, n - 1, nu});
    u.terms.push_back({c * (rho + 1.0) * (n + 1.0), 0, n + 1, nu});
    RadialFunction v(b.alpha);
    v.terms.push_back({a_n, 0, n, nu});
    up += u.compact().scaled(f[n]);
    low += v.scaled(f[n]);
  }
  SeriesSolution sol;
  sol.phys = phys;
  sol.basis = b;
  sol.derived = derived_params(b);
  sol.N = N;
  sol.f.assign(f.begin(), f.end() - 1);
  sol.f_next = f.back();
  sol.mirrored = true;
  const RadialMeasure measure = b.measure();
  up = up.compact();
  low = low.compact();
  const double norm2 = radial_overlap(up, up, measure) + radial_overlap(low, low, measure);
  sol.normalization = 1.0 / std::sqrt(norm2);
  sol.upper = up.scaled(sol.normalization);
  sol.lower = low.scaled(sol.normalization);
  sol.image = apply_dirac(phys, measure, sol.upper, sol.lower);
  return sol;
}

}  // namespace tridirac
