#pragma once

#include <functional>
#include <vector>

#include "tridirac/basis.hpp"
#include "tridirac/dirac_operator.hpp"
#include "tridirac/real.hpp"

namespace tridirac {

/// Which rescaling of the expansion coefficients a sequence holds:
///   F  f_n themselves
///   G  g_n = sqrt(Gamma(n+1+nu) / n!) f_n   (representations A and B)
///   H  h_n = sqrt(n! / Gamma(n+1+nu)) f_n   (representation C)
enum class Scaling { F, G, H };

/// a(n) s_n + b(n) s_{n-1} + c(n) s_{n+1} = 0 with s_0 = 1.
///
/// Coefficients are built in extended precision from the same double
/// parameters the closed forms take, so forward iteration follows a
/// decaying (minimal) solution far enough to be compared with them.
struct ThreeTermRecursion {
  std::function<Real(int)> a;
  std::function<Real(int)> b;
  std::function<Real(int)> c;
  Scaling scaling = Scaling::F;
  double nu = 0.0;

  /// a(n) s_n + b(n) s_{n-1} + c(n) s_{n+1} for a stored sequence.
  double residual(const std::vector<double>& s, int n) const;
  /// |a(n) s_n| + |b(n) s_{n-1}| + |c(n) s_{n+1}|.
  double magnitude(const std::vector<double>& s, int n) const;
};

struct CoefficientSequence {
  std::vector<double> values;
  Scaling scaling = Scaling::F;
  double nu = 0.0;

  int size() const { return static_cast<int>(values.size()); }
};

/// Reduced recursion: g-scaled hyperbolic (or ordinary) Meixner-Pollaczek
/// form for A/B, h-scaled dual Hahn form for C.
ThreeTermRecursion build_recursion(const BasisParams& basis, const DerivedParams& derived);

/// Recursion for f_n exactly as the rows of H-1 read before any rescaling
/// (square-root off-diagonal factors).
ThreeTermRecursion build_f_recursion(const BasisParams& basis, const DerivedParams& derived);

/// D_n f_n + B_{n-1} f_{n-1} + B_n f_{n+1} = 0 taken straight from an operator.
ThreeTermRecursion operator_recursion(const TridiagonalOperator& op);

/// s_0..s_N by upward recurrence in Real. Throws NumericalError naming
/// the first n with c(n) = 0.
CoefficientSequence solve_forward(const ThreeTermRecursion& rec, int N);

/// s_0..s_N from the polynomial closed forms, evaluated by their terminating
/// hypergeometric series.
CoefficientSequence closed_form_sequence(const BasisParams& basis, const DerivedParams& derived, int N);

CoefficientSequence rescale(const CoefficientSequence& seq, Scaling target);

}  // namespace tridirac
