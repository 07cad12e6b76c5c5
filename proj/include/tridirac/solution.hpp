#pragma once

#include <vector>

#include "tridirac/basis.hpp"
#include "tridirac/dirac_operator.hpp"
#include "tridirac/recursion.hpp"

namespace tridirac {

enum class CoefficientSource { ClosedForm, Forward };

/// Truncated series chi_N = Nc sum_{n<=N} f_n psi_n.
///
/// For epsilon = -1 the series is built for (-A, -kappa) at epsilon = +1 and
/// the components are swapped; `basis` and `derived` then describe that
/// mirrored problem and `mirrored` is set.
struct SeriesSolution {
  PhysicalParams phys;
  BasisParams basis;
  DerivedParams derived;
  int N = 0;
  std::vector<double> f;    // f_0..f_N, unnormalized
  double f_next = 0.0;      // f_{N+1}, unnormalized
  double normalization = 1.0;
  bool mirrored = false;
  RadialFunction upper;     // normalized upper component
  RadialFunction lower;     // normalized lower component
  DiracImage image;         // Dirac operator applied to (upper, lower)

  double x_of_r(double r) const { return basis.x_of_r(r); }
  /// Basis spinor psi_n as (upper, lower) in this solution's component order.
  std::pair<RadialFunction, RadialFunction> basis_spinor(int n) const;
};

struct SpinorSample {
  double r = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
};

struct DiracResidual {
  double plus = 0.0;
  double minus = 0.0;
  double scale_plus = 0.0;   // |mass| + |potential| + |derivative| of row +
  double scale_minus = 0.0;
};

SeriesSolution assemble(const PhysicalParams& phys, const BasisOptions& options, int N,
                        CoefficientSource source = CoefficientSource::ClosedForm);

/// Same series from an explicit f-sequence (f_0..f_{N+1}); used for the
/// rescaling invariance check.
SeriesSolution assemble_from_coefficients(const PhysicalParams& phys, const BasisParams& basis,
                                          const std::vector<double>& f_with_next);

SpinorSample evaluate(const SeriesSolution& sol, double r);

DiracResidual dirac_residual(const SeriesSolution& sol, double r);

struct SecondOrderResidual {
  double value = 0.0;
  double scale = 0.0;
};

/// component = +1 for phi^+, -1 for phi^-.
SecondOrderResidual second_order_residual(const SeriesSolution& sol, double r, int component);

/// <psi_n|(H - eps)|chi_N> by quadrature, n = 0..N.
std::vector<double> weak_form_residual(const SeriesSolution& sol);

/// Value the n = N entry of the weak form must take: -B_N f_{N+1} Nc, with
/// the sign flipped for a mirrored solution.
double weak_form_boundary(const SeriesSolution& sol);

/// Size of each weak-form row: sum over the mass, potential and derivative
/// terms of |<psi_n|term>|, n = 0..N.
std::vector<double> weak_form_scale(const SeriesSolution& sol);

/// |w_N - boundary| / max(|boundary|, 1e-8 scale_N): relative error of the
/// n = N weak-form entry, floored at the level the interior rows count as zero.
double weak_form_boundary_error(const SeriesSolution& sol);

/// Kinetic balance of the n-th basis spinor in the solution's own component
/// order, evaluated from the physical operator:
///   eps = +1:  phi^- - lambda/2 (kappa/r + A/r^mu + d/dr) phi^+
///   eps = -1:  phi^+ - lambda/(eps-1) (kappa/r + A/r^mu - d/dr) phi^-
/// Returns {difference, |target component|}.
std::pair<double, double> kinetic_balance_residual(const SeriesSolution& sol, int n, double r);

/// Grid of `points` r-values, log-spaced in x(r) on [x_min, x_max], sorted by r.
std::vector<double> report_grid(const BasisParams& basis, int points = 60, double x_min = 0.01, double x_max = 30.0);

/// Grid indices excluded at each end from pass/fail statistics.
inline constexpr int kGridEdge = 6;

struct ResidualStats {
  double max_residual = 0.0;  // interior max of |row+|, |row-|
  double max_scale = 0.0;     // interior max of the row scales
  double relative() const { return max_scale > 0.0 ? max_residual / max_scale : max_residual; }
};

ResidualStats interior_residual(const SeriesSolution& sol, const std::vector<double>& grid);

// Diagonal special case ----------------------------------------------------------

/// One zero of the diagonal-representation conditions rho^2 = 1 and
/// (2kappa+1)/beta (rho +- 1) + 1 - rho = -2n for +-beta kappa > 0.
struct DiagonalCandidate {
  int n = 0;
  double rho = 0.0;
  int kappa = 0;
  double beta = 0.0;
};

/// Scans kappa in [-kappa_max, kappa_max], the given betas, rho = +-1 and
/// n = 0..n_max, keeping admissible parameter points only.
std::vector<DiagonalCandidate> scan_diagonal_conditions(const std::vector<double>& betas, int kappa_max = 6,
                                                        int n_max = 40);

struct DiagonalCase {
  SeriesSolution solution;
  double diag0 = 0.0;       // (H-1)_{00}
  double offdiag0 = 0.0;    // (H-1)_{10}
  double sigma_minus = 0.0; // rho^2 - 1 at the tuned omega
  double legacy_nu = 0.0;   // earlier parametrization: beta = 1/(nu + 1/2)
  double legacy_lambda = 0.0;  // omega^beta = lambda^2
};

/// Single-term solution at rho = +1 (omega^beta = 2A/beta), requires
/// beta kappa < 0 and beta A > 0.
DiagonalCase diagonal_special_case(const PhysicalParams& phys);

// Negative energy -----------------------------------------------------------------

PhysicalParams mirrored_params(const PhysicalParams& phys);

/// Swap the components and map (A, kappa, eps) -> (-A, -kappa, -eps).
SeriesSolution mirror(const SeriesSolution& sol);

/// Epsilon = -1 solution through the mirror map of the epsilon = +1 problem
/// for (-A, -kappa).
SeriesSolution negative_energy_solution(const PhysicalParams& phys, const BasisOptions& options, int N);

/// Representation C at epsilon = -1 written out directly: the lower
/// component is the Laguerre function, the upper component is the C form with
/// rho -> -rho, and the coefficients are modified dual Hahn polynomials with
/// y^2 = ((kappa - 1/2)/beta)^2. Normalized, not mirrored.
SeriesSolution negative_energy_direct_c(const PhysicalParams& phys, const BasisOptions& options, int N);

}  // namespace tridirac
