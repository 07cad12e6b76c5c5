#include "tridirac/radial_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "tridirac/errors.hpp"
#include "tridirac/orthopoly.hpp"

namespace tridirac {

namespace {

double envelope(double power, double x) { return std::exp(power * std::log(x) - 0.5 * x); }

double laguerre_or_zero(int n, double nu, double x) { return n < 0 ? 0.0 : laguerre_eval(n, nu, x); }

}  // namespace

double RadialFunction::poly(double x) const {
  double sum = 0.0;
  for (const auto& t : terms) {
    sum += t.coef * std::pow(x, t.shift) * laguerre_or_zero(t.n, t.nu, x);
  }
  return sum;
}

double RadialFunction::value(double x) const { return envelope(power, x) * poly(x); }

double RadialFunction::d1(double x) const {
  if (!(x > 0.0)) {
    throw ParameterError("radial derivative needs x > 0");
  }
  double sum = 0.0;
  for (const auto& t : terms) {
    if (t.n < 0) {
      continue;
    }
    const double a = power + t.shift;
    const double l = laguerre_eval(t.n, t.nu, x);
    const double dl = laguerre_deriv(t.n, t.nu, x);
    sum += t.coef * std::exp(a * std::log(x) - 0.5 * x) * ((a / x - 0.5) * l + dl);
  }
  return sum;
}

double RadialFunction::d2(double x) const {
  if (!(x > 0.0)) {
    throw ParameterError("radial derivative needs x > 0");
  }
  double sum = 0.0;
  for (const auto& t : terms) {
    if (t.n < 0) {
      continue;
    }
    const double a = power + t.shift;
    const double l = laguerre_eval(t.n, t.nu, x);
    const double dl = laguerre_deriv(t.n, t.nu, x);
    const double ddl = laguerre_deriv2(t.n, t.nu, x);
    const double g = a / x - 0.5;
    sum += t.coef * std::exp(a * std::log(x) - 0.5 * x) * ((g * g - a / (x * x)) * l + 2.0 * g * dl + ddl);
  }
  return sum;
}

int RadialFunction::degree() const {
  int deg = 0;
  for (const auto& t : terms) {
    if (t.n >= 0) {
      deg = std::max(deg, t.shift + t.n);
    }
  }
  return deg;
}

// d/dx[x^{p+s} e^{-x/2} L_n] = x^{p-1} e^{-x/2} x^s [(p+s+n) L_n - (x/2) L_n - (n+nu) L_{n-1}]
RadialFunction RadialFunction::derivative() const {
  RadialFunction out(power - 1.0);
  for (const auto& t : terms) {
    if (t.n < 0) {
      continue;
    }
    out.terms.push_back({t.coef * (power + t.shift + t.n), t.shift, t.n, t.nu});
    out.terms.push_back({-0.5 * t.coef, t.shift + 1, t.n, t.nu});
    if (t.n >= 1) {
      out.terms.push_back({-t.coef * (t.n + t.nu), t.shift, t.n - 1, t.nu});
    }
  }
  return out.compact();
}

RadialFunction RadialFunction::times_x(int k) const {
  RadialFunction out = *this;
  for (auto& t : out.terms) {
    t.shift += k;
  }
  return out;
}

RadialFunction RadialFunction::times_power(double e) const {
  RadialFunction out = *this;
  out.power += e;
  return out;
}

RadialFunction RadialFunction::scaled(double c) const {
  RadialFunction out = *this;
  for (auto& t : out.terms) {
    t.coef *= c;
  }
  return out;
}

RadialFunction& RadialFunction::operator+=(const RadialFunction& other) {
  if (other.terms.empty()) {
    return *this;
  }
  if (terms.empty()) {
    *this = other;
    return *this;
  }
  const double diff = other.power - power;
  const double rounded = std::round(diff);
  if (std::abs(diff - rounded) > 1e-12 * std::max(1.0, std::abs(diff))) {
    throw ParameterError("cannot add radial functions whose powers differ by a non-integer");
  }
  const int k = static_cast<int>(rounded);
  if (k >= 0) {
    for (auto t : other.terms) {
      t.shift += k;
      terms.push_back(t);
    }
  } else {
    for (auto& t : terms) {
      t.shift -= k;
    }
    power = other.power;
    terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  }
  return *this;
}

RadialFunction RadialFunction::compact() const {
  std::map<std::tuple<int, int, double>, double> merged;
  for (const auto& t : terms) {
    if (t.n < 0) {
      continue;
    }
    merged[{t.shift, t.n, t.nu}] += t.coef;
  }
  RadialFunction out(power);
  for (const auto& [key, coef] : merged) {
    if (coef != 0.0) {
      out.terms.push_back({coef, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
    }
  }
  // a common factor x^k belongs in the power, so integrability checks see it
  if (!out.terms.empty()) {
    int k = out.terms.front().shift;
    for (const auto& t : out.terms) {
      k = std::min(k, t.shift);
    }
    for (auto& t : out.terms) {
      t.shift -= k;
    }
    out.power += k;
  }
  return out;
}

RadialFunction operator+(RadialFunction a, const RadialFunction& b) {
  a += b;
  return a;
}

}  // namespace tridirac
