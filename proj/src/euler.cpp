#include "gencheb/euler.hpp"

#include <algorithm>
#include <cmath>

namespace gencheb {

namespace {

constexpr std::size_t kMaxTerms = 100000;

void check_inputs(double phi, double tol) {
  if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
  if (!std::isfinite(phi)) throw UsageError("phi must be finite");
}

}  // namespace

EulerJet euler_series_with_derivatives(const GcnUnit<double>& unit, double phi, double tol) {
  check_inputs(phi, tol);
  const double growth = std::max(std::abs(unit.a), 1.0 + std::abs(unit.b));
  const double x = growth * std::abs(phi);

  EulerJet jet;
  jet.value.unit = unit;
  jet.value.phi = phi;

  double a_n = 1.0;
  double b_n = 0.0;
  double weight = 1.0;    // phi^n / n!
  double majorant = 1.0;  // x^n / n!
  for (std::size_t n = 0; n < kMaxTerms; ++n) {
    const double a_next = unit.a * b_n;
    const double b_next = a_n + unit.b * b_n;
    jet.value.C += weight * a_n;
    jet.value.S += weight * b_n;
    jet.dC += weight * a_next;
    jet.dS += weight * b_next;
    jet.value.terms = n + 1;

    const auto k = static_cast<double>(n + 1);
    majorant *= x / k;
    // Remaining tail of the majorant, valid once the ratio x/(n+2) < 1;
    // the extra factor covers the shifted derivative coefficients.
    if (x < k + 1.0) {
      const double tail = majorant / (1.0 - x / (k + 1.0)) * growth;
      if (tail < tol) return jet;
    }
    if (!std::isfinite(majorant)) break;
    weight *= phi / k;
    a_n = a_next;
    b_n = b_next;
  }
  throw DomainError("Euler series did not reach the requested tolerance (|phi| too large)");
}

EulerPair euler_series(const GcnUnit<double>& unit, double phi, double tol) {
  return euler_series_with_derivatives(unit, phi, tol).value;
}

EulerPair euler_closed_form(const GcnUnit<double>& unit, double phi) {
  if (!std::isfinite(phi)) throw UsageError("phi must be finite");
  EulerPair out{unit, phi, 0.0, 0.0, 0};
  if (unit.discriminant() == 0.0) {
    const double e = std::exp(unit.b * phi / 2.0);
    out.S = phi * e;
    out.C = (1.0 - unit.b * phi / 2.0) * e;
    return out;
  }
  const auto [hp, hm] = conjugate_roots_numeric(unit.a, unit.b);
  const std::complex<double> ep = std::exp(hp * phi);
  const std::complex<double> em = std::exp(hm * phi);
  const std::complex<double> diff = hp - hm;
  out.S = ((ep - em) / diff).real();
  out.C = ((hp * em - hm * ep) / diff).real();
  return out;
}

OdeResidualReport ode_residual(const GcnUnit<double>& unit, std::span<const double> grid, double tol) {
  if (grid.size() < 3) throw UsageError("ODE residual needs a grid of at least 3 points");
  OdeResidualReport report;
  report.points = grid.size();
  for (double phi : grid) {
    const EulerJet jet = euler_series_with_derivatives(unit, phi, tol);
    const double rc = std::abs(jet.dC - unit.a * jet.value.S);
    const double rs = std::abs(jet.dS - jet.value.C - unit.b * jet.value.S);
    report.max_c_residual = std::max(report.max_c_residual, rc);
    report.max_s_residual = std::max(report.max_s_residual, rs);
  }
  return report;
}

}  // namespace gencheb
