#pragma once

#include <cstddef>
#include <span>

#include "gencheb/gcn.hpp"

namespace gencheb {

inline constexpr double kDefaultTolerance = 1e-12;

/// exp(h*phi) = C(phi) + h*S(phi) for a real unit.
struct EulerPair {
  GcnUnit<double> unit;
  double phi = 0.0;
  double C = 0.0;
  double S = 0.0;
  /// Series terms summed; zero for closed-form evaluations.
  std::size_t terms = 0;
};

/// Value and phi-derivative of the pair, both from the same truncated series.
struct EulerJet {
  EulerPair value;
  double dC = 0.0;
  double dS = 0.0;
};

/// Sums C = sum phi^n/n! a_n and S = sum phi^n/n! b_n.
///
/// Since |a_n|, |b_n| <= K^n with K = max(|a|, 1 + |b|), the tail after term N
/// is bounded by the exponential majorant in x = K|phi|; summation stops once
/// that bound drops below `tol`. Throws UsageError for tol <= 0 or non-finite phi.
EulerPair euler_series(const GcnUnit<double>& unit, double phi, double tol = kDefaultTolerance);

/// Like euler_series, also differentiating term by term
/// (C' = sum phi^n/n! a_{n+1}, S' = sum phi^n/n! b_{n+1}).
EulerJet euler_series_with_derivatives(const GcnUnit<double>& unit, double phi,
                                       double tol = kDefaultTolerance);

/// Closed form through the roots h±:
///   S = (e^{h+ phi} - e^{h- phi}) / (h+ - h-)
///   C = (h+ e^{h- phi} - h- e^{h+ phi}) / (h+ - h-)
/// and, for a vanishing discriminant, S = phi e^{b phi/2}, C = (1 - b phi/2) e^{b phi/2}.
EulerPair euler_closed_form(const GcnUnit<double>& unit, double phi);

struct OdeResidualReport {
  std::size_t points = 0;
  /// max |C' - a S|
  double max_c_residual = 0.0;
  /// max |S' - C - b S|
  double max_s_residual = 0.0;
};

/// Checks C' = a S and S' = C + b S on a grid of at least three points.
OdeResidualReport ode_residual(const GcnUnit<double>& unit, std::span<const double> grid,
                               double tol = kDefaultTolerance);

}  // namespace gencheb
