#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "gencheb/errors.hpp"
#include "gencheb/matrix.hpp"
#include "gencheb/ring.hpp"

namespace gencheb {

/// Generalized complex unit h with h^2 = a + b*h.
template <class R>
struct GcnUnit {
  R a;
  R b;

  /// b^2 + 4a.
  R discriminant() const { return b * b + R(4) * a; }
  bool degenerate() const { return discriminant() == R(0); }

  friend bool operator==(const GcnUnit&, const GcnUnit&) = default;
};

/// re + im*h over a fixed unit.
template <class R>
struct GcnElement {
  GcnUnit<R> unit;
  R re;
  R im;

  friend bool operator==(const GcnElement&, const GcnElement&) = default;
};

/// Product reduced through h^2 = a + b*h.
template <class R>
GcnElement<R> gcn_mul(const GcnElement<R>& x, const GcnElement<R>& y) {
  if (!(x.unit == y.unit)) {
    throw DomainError("gcn_mul: operands belong to different units");
  }
  const R& a = x.unit.a;
  const R& b = x.unit.b;
  const R hh = x.im * y.im;
  return {x.unit, x.re * y.re + a * hh, x.re * y.im + x.im * y.re + b * hh};
}

template <class R>
GcnElement<R> gcn_h(const GcnUnit<R>& unit) {
  return {unit, R(0), R(1)};
}

enum class PowerMethod { recurrence, matrix, binet };

/// Components of h^n = a_n + b_n h.
template <class R>
struct PowerCoeffs {
  R a_n;
  R b_n;

  friend bool operator==(const PowerCoeffs&, const PowerCoeffs&) = default;
};

/// Q(a, b) = [[0, a], [1, b]]; advances (a_n, b_n) to (a_{n+1}, b_{n+1}).
template <class R>
Matrix2<R> companion(const GcnUnit<R>& unit) {
  return Matrix2<R>{{R(0), unit.a}, {R(1), unit.b}};
}

template <class R>
Matrix2<R> companion_power(const GcnUnit<R>& unit, long n) {
  if (n < 0) throw DomainError("companion_power: negative exponent " + std::to_string(n));
  return matrix_power(companion(unit), n);
}

/// p + q*sqrt(radicand), with products reduced by sqrt(radicand)^2 = radicand.
/// Operands combined together must share the radicand.
template <class R>
struct Surd {
  R rational;
  R surd;
  R radicand;

  Surd operator+(const Surd& rhs) const { return {rational + rhs.rational, surd + rhs.surd, radicand}; }
  Surd operator-(const Surd& rhs) const { return {rational - rhs.rational, surd - rhs.surd, radicand}; }
  Surd operator*(const Surd& rhs) const {
    return {rational * rhs.rational + surd * rhs.surd * radicand, rational * rhs.surd + surd * rhs.rational,
            radicand};
  }

  Surd pow(long n) const {
    Surd result{R(1), R(0), radicand};
    Surd base = *this;
    auto e = static_cast<unsigned long>(n);
    while (e != 0) {
      if (e & 1UL) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Exact quotient by sqrt(radicand); requires the rational part to vanish.
  R divided_by_root() const {
    if (!(rational == R(0))) {
      throw std::logic_error("Binet quotient is not a multiple of the root");
    }
    return surd;
  }

  bool is_rational() const { return surd == R(0); }

  friend bool operator==(const Surd& lhs, const Surd& rhs) {
    return lhs.rational == rhs.rational && lhs.surd == rhs.surd;
  }
};

/// h± = (b ± sqrt(b^2 + 4a)) / 2 in surd form.
template <class R>
struct ConjugateRoots {
  Surd<R> h_plus;
  Surd<R> h_minus;
  bool degenerate = false;
};

template <ExactRing R>
ConjugateRoots<R> conjugate_roots(const GcnUnit<R>& unit) {
  const R delta = unit.discriminant();
  const R half = from_rational<R>(BigRational(1, 2));
  const R mid = half * unit.b;
  return {Surd<R>{mid, half, delta}, Surd<R>{mid, -half, delta}, delta == R(0)};
}

namespace detail {

template <class R>
PowerCoeffs<R> power_by_recurrence(const GcnUnit<R>& unit, long n) {
  R a_n(1);
  R b_n(0);
  for (long k = 0; k < n; ++k) {
    R next_a = unit.a * b_n;
    b_n = a_n + unit.b * b_n;
    a_n = std::move(next_a);
  }
  return {std::move(a_n), std::move(b_n)};
}

template <class R>
PowerCoeffs<R> power_by_matrix(const GcnUnit<R>& unit, long n) {
  const Matrix2<R> q = companion_power(unit, n);
  // Q^n applied to (a_0, b_0) = (1, 0) is the first column.
  return {q(0, 0), q(1, 0)};
}

template <ExactRing R>
PowerCoeffs<R> power_by_binet(const GcnUnit<R>& unit, long n) {
  if (n == 0) return {R(1), R(0)};
  const ConjugateRoots<R> roots = conjugate_roots(unit);
  if (roots.degenerate) {
    // Removable singularity at h+ = h- = b/2.
    const R half_b = from_rational<R>(BigRational(1, 2)) * unit.b;
    const auto b_at = [&](long k) -> R {
      if (k == 0) return R(0);
      R p(1);
      for (long j = 1; j < k; ++j) p = p * half_b;
      return from_int<R>(k) * p;
    };
    return {unit.a * b_at(n - 1), b_at(n)};
  }
  const Surd<R> plus_n = roots.h_plus.pow(n);
  const Surd<R> minus_n = roots.h_minus.pow(n);
  // h+ - h- = sqrt(delta), so both quotients are divisions by the root.
  const Surd<R> a_num = roots.h_plus * minus_n - roots.h_minus * plus_n;
  const Surd<R> b_num = plus_n - minus_n;
  return {a_num.divided_by_root(), b_num.divided_by_root()};
}

}  // namespace detail

/// (a_n, b_n) with h^n = a_n + b_n h, seeds a_0 = 1, b_0 = 0.
///
/// All three methods are exact. Binet works in the ring extended by
/// sqrt(b^2 + 4a) and falls back to the limit form n (b/2)^(n-1) when the
/// discriminant vanishes.
template <ExactRing R>
PowerCoeffs<R> gcn_power_coeffs(const GcnUnit<R>& unit, long n, PowerMethod method) {
  if (n < 0) throw DomainError("gcn_power_coeffs: negative power " + std::to_string(n));
  switch (method) {
    case PowerMethod::recurrence:
      return detail::power_by_recurrence(unit, n);
    case PowerMethod::matrix:
      return detail::power_by_matrix(unit, n);
    case PowerMethod::binet:
      return detail::power_by_binet(unit, n);
  }
  throw std::logic_error("unknown power method");
}

/// Floating Binet evaluation for a real unit; always an approximation.
struct FloatingPowerCoeffs {
  double a_n = 0.0;
  double b_n = 0.0;
  bool approximate = true;
};

FloatingPowerCoeffs binet_power_coeffs_floating(double a, double b, long n);

/// h± as complex doubles, h+ first.
std::pair<std::complex<double>, std::complex<double>> conjugate_roots_numeric(double a, double b);

PowerMethod parse_power_method(const std::string& name);

}  // namespace gencheb
