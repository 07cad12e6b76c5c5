#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "tridirac/errors.hpp"
#include "tridirac/solution.hpp"

using namespace tridirac;
using tridirac::testing::phys;
using tridirac::testing::rel_err;

namespace {

double norm_of(const SeriesSolution& s) {
  const RadialMeasure m = s.basis.measure();
  return radial_overlap(s.upper, s.upper, m) + radial_overlap(s.lower, s.lower, m);
}

std::vector<double> sample_r(const SeriesSolution& s, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lx(std::log(0.05), std::log(20.0));
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double x = std::exp(lx(rng));
    out.push_back(std::pow(x, 1.0 / s.basis.beta) / s.basis.omega);
  }
  return out;
}

}  // namespace

TEST_CASE("normalized series and weak form") {
  for (const auto& c : tridirac::testing::standard_cases()) {
    CAPTURE(c.label);
    for (int eps : {1, -1}) {
      CAPTURE(eps);
      PhysicalParams p = c.phys;
      p.epsilon = eps;
      SeriesSolution s;
      try {
        s = assemble(p, c.options, 12);
      } catch (const ParameterError&) {
        continue;  // mirrored parameters outside every representation
      }
      CHECK(std::abs(norm_of(s) - 1.0) < 1e-12);
      const auto w = weak_form_residual(s);
      const auto scale = weak_form_scale(s);
      for (int n = 0; n < s.N; ++n) {
        CHECK(std::abs(w[n]) < 1e-8 * scale[n]);
      }
      CHECK(weak_form_boundary_error(s) < 1e-6);
    }
  }
}

TEST_CASE("closed-form and forward sources agree") {
  for (const auto& c : tridirac::testing::standard_cases()) {
    CAPTURE(c.label);
    const SeriesSolution a = assemble(c.phys, c.options, 15, CoefficientSource::ClosedForm);
    const SeriesSolution b = assemble(c.phys, c.options, 15, CoefficientSource::Forward);
    for (double r : sample_r(a, 5, 3)) {
      const SpinorSample sa = evaluate(a, r);
      const SpinorSample sb = evaluate(b, r);
      CHECK(std::abs(sa.phi_plus - sb.phi_plus) < 1e-6 * (std::abs(sa.phi_plus) + std::abs(sa.phi_minus) + 1e-12));
    }
  }
}

TEST_CASE("overall scale of f does not change the normalized solution") {
  const PhysicalParams p = phys(-1.0, 2.0, 1);
  const SeriesSolution s = assemble(p, {}, 10);
  std::vector<double> scaled = s.f;
  scaled.push_back(s.f_next);
  for (double& v : scaled) {
    v *= -37.5;
  }
  const SeriesSolution t = assemble_from_coefficients(p, s.basis, scaled);
  for (double r : sample_r(s, 8, 11)) {
    const SpinorSample a = evaluate(s, r);
    const SpinorSample b = evaluate(t, r);
    CHECK(std::abs(a.phi_plus + b.phi_plus) < 1e-12 * (std::abs(a.phi_plus) + 1e-300));
    CHECK(std::abs(a.phi_minus + b.phi_minus) < 1e-12 * (std::abs(a.phi_minus) + 1e-300));
  }
}

TEST_CASE("series is linear in the basis spinors") {
  const PhysicalParams p = phys(3.0, -2.0, 1);
  const SeriesSolution s = assemble(p, {}, 6);
  for (double r : sample_r(s, 5, 5)) {
    const double x = s.x_of_r(r);
    double up = 0.0;
    double low = 0.0;
    for (int n = 0; n <= s.N; ++n) {
      up += s.f[n] * phi_plus(s.basis, n, r);
      low += s.f[n] * phi_minus(s.basis, n, r);
    }
    CHECK(rel_err(s.upper.value(x), s.normalization * up) < 1e-10);
    CHECK(rel_err(s.lower.value(x), s.normalization * low) < 1e-10);
  }
}

TEST_CASE("convergent case: interior residual falls and tail is bounded") {
  const PhysicalParams p = phys(-1.0, 2.0, 1);
  const SeriesSolution a = assemble(p, {}, 20);
  const SeriesSolution b = assemble(p, {}, 25);
  const SeriesSolution coarse = assemble(p, {}, 5);
  const auto grid = report_grid(a.basis);
  CHECK(interior_residual(a, grid).relative() < 1e-4);
  CHECK(interior_residual(a, grid).relative() < 1e-2 * interior_residual(coarse, grid).relative());
  for (std::size_t i = kGridEdge; i + kGridEdge < grid.size(); i += 7) {
    const SpinorSample sa = evaluate(a, grid[i]);
    const SpinorSample sb = evaluate(b, grid[i]);
    CHECK(std::abs(sa.phi_plus - sb.phi_plus) < 1e-4);
    CHECK(std::abs(sa.phi_minus - sb.phi_minus) < 1e-4);
  }
}

TEST_CASE("second-order equation matches the first-order rows") {
  // For a solution of both first-order rows phi^+ also solves the second-order
  // equation; for a truncated series the two residuals shrink together.
  const PhysicalParams p = phys(-1.0, 2.0, 1);
  const SeriesSolution s = assemble(p, {}, 40);
  const auto grid = report_grid(s.basis);
  for (std::size_t i = kGridEdge; i + kGridEdge < grid.size(); ++i) {
    const SecondOrderResidual so = second_order_residual(s, grid[i], 1);
    CHECK(std::abs(so.value) < 1e-7 * so.scale);
  }
}

TEST_CASE("diagonal special case") {
  for (const auto& p : {phys(-1.0, 2.0, 1), phys(1.0, -2.0, -2)}) {
    CAPTURE(p.A);
    const DiagonalCase dc = diagonal_special_case(p);
    CHECK(std::abs(dc.diag0) < 1e-10);
    CHECK(std::abs(dc.offdiag0) < 1e-10);
    CHECK(std::abs(dc.sigma_minus) < 1e-12);
    CHECK(dc.solution.N == 0);
    const auto grid = report_grid(dc.solution.basis);
    for (double r : grid) {
      const DiracResidual res = dirac_residual(dc.solution, r);
      CHECK(std::abs(res.plus) < 1e-10 * (res.scale_plus + 1e-300));
      CHECK(std::abs(res.minus) < 1e-10 * (res.scale_minus + 1e-300));
      for (int comp : {1, -1}) {
        const SecondOrderResidual so = second_order_residual(dc.solution, r, comp);
        CHECK(std::abs(so.value) <= (so.scale > 0.0 ? 1e-8 * so.scale : 1e-12));
      }
    }
  }
  CHECK_THROWS_AS(diagonal_special_case(phys(-1.0, 2.0, -1)), ParameterError);
  CHECK_THROWS_AS(diagonal_special_case(phys(1.0, 2.0, 1)), ParameterError);
  CHECK_THROWS_AS(diagonal_special_case(phys(-1.0, 2.0, 1, -1)), ParameterError);
}

TEST_CASE("diagonal condition scan") {
  const auto found = scan_diagonal_conditions({-1.0, -3.0, 0.5, 2.0});
  bool has_beta_minus_one = false;
  for (const auto& d : found) {
    const double k2 = (2.0 * d.kappa + 1.0) / d.beta;
    const double s = d.beta * d.kappa > 0 ? 1.0 : -1.0;
    CHECK(std::abs(k2 * (d.rho + s) + 1.0 - d.rho + 2.0 * d.n) < 1e-9);
    has_beta_minus_one = has_beta_minus_one || (d.beta == -1.0 && d.kappa == 1 && d.n == 0 && d.rho == 1.0);
  }
  CHECK(has_beta_minus_one);
}

TEST_CASE("negative energy through the mirror map") {
  const PhysicalParams p = phys(3.0, -2.0, 1, -1);
  const SeriesSolution s = negative_energy_solution(p, {}, 10);
  CHECK(s.mirrored);
  CHECK(std::abs(norm_of(s) - 1.0) < 1e-12);
  const SeriesSolution back = mirror(s);
  CHECK_FALSE(back.mirrored);
  CHECK(back.phys.epsilon == 1);
  for (double r : sample_r(s, 10, 17)) {
    const SpinorSample a = evaluate(s, r);
    const SpinorSample b = evaluate(back, r);
    CHECK(a.phi_plus == b.phi_minus);
    CHECK(a.phi_minus == b.phi_plus);
    const SpinorSample c = evaluate(mirror(back), r);
    CHECK(c.phi_plus == a.phi_plus);
    CHECK(c.phi_minus == a.phi_minus);
  }
  CHECK_THROWS_AS(negative_energy_solution(phys(3.0, -2.0, 1), {}, 4), ParameterError);
}

TEST_CASE("kinetic balance at both energies") {
  for (int eps : {1, -1}) {
    for (const auto& p : {phys(3.0, -2.0, 1, eps), phys(-1.0, 2.0, 1, eps), phys(1.0, 2.0, -1, eps)}) {
      CAPTURE(eps);
      CAPTURE(p.kappa);
      const SeriesSolution s = assemble(p, {}, 4);
      for (double r : sample_r(s, 6, 23)) {
        for (int n = 0; n <= 6; ++n) {
          const auto [diff, scale] = kinetic_balance_residual(s, n, r);
          CHECK(std::abs(diff) < 1e-8 * (scale + 1e-300));
        }
      }
    }
  }
}

TEST_CASE("mass term vanishes at epsilon = +1") {
  const SeriesSolution s = assemble(phys(-1.0, 2.0, 1), {}, 5);
  CHECK(s.image.mass_plus.empty());
  for (double r : sample_r(s, 5, 29)) {
    CHECK(dirac_residual(s, r).scale_plus >= 0.0);
  }
}

TEST_CASE("direct negative-energy representation C agrees with the mirror") {
  const PhysicalParams p = phys(-1.0, 2.0, 1, -1);
  BasisOptions opt;
  opt.representation = Representation::C;
  const SeriesSolution mapped = negative_energy_solution(p, opt, 10);
  const SeriesSolution direct = negative_energy_direct_c(p, opt, 10);
  for (double r : sample_r(mapped, 10, 31)) {
    const SpinorSample a = evaluate(mapped, r);
    const SpinorSample b = evaluate(direct, r);
    const double s = std::abs(a.phi_plus) + std::abs(a.phi_minus);
    CHECK(std::abs(std::abs(a.phi_plus) - std::abs(b.phi_plus)) < 1e-8 * s);
    CHECK(std::abs(std::abs(a.phi_minus) - std::abs(b.phi_minus)) < 1e-8 * s);
  }
}

TEST_CASE("input checks") {
  const SeriesSolution s = assemble(phys(3.0, -2.0, 1), {}, 3);
  CHECK_THROWS_AS(evaluate(s, 0.0), ParameterError);
  CHECK_THROWS_AS(evaluate(s, -1.0), ParameterError);
  CHECK_THROWS_AS(assemble(phys(3.0, -2.0, 1), {}, -1), ParameterError);
  CHECK_THROWS_AS(assemble(phys(3.0, 0.0, 1), {}, 3), ParameterError);
  CHECK_THROWS_AS(assemble_from_coefficients(phys(3.0, -2.0, 1), s.basis, {1.0}), ParameterError);
}
