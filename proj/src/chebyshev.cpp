#include "gencheb/chebyshev.hpp"

#include <array>

#include "gencheb/errors.hpp"

namespace gencheb {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": index must be non-negative, got " + std::to_string(n));
}

}  // namespace

const std::vector<std::string>& cheb_variables() {
  static const std::vector<std::string> vars{"x"};
  return vars;
}

MultiPoly cheb_x() { return MultiPoly::variable(cheb_variables(), "x"); }

GcnUnit<MultiPoly> cheb_unit() {
  return {MultiPoly::constant(cheb_variables(), -1), cheb_x() * GaussianRational(2)};
}

std::vector<MultiPoly> second_kind_table(long n_max) {
  if (n_max < -2) throw DomainError("second_kind_table: n_max must be at least -2");
  const MultiPoly two_x = cheb_x() * GaussianRational(2);
  std::vector<MultiPoly> table;
  table.reserve(static_cast<std::size_t>(n_max + 3));
  table.push_back(MultiPoly::constant(cheb_variables(), -1));
  table.push_back(MultiPoly(cheb_variables()));
  while (static_cast<long>(table.size()) < n_max + 3) {
    const std::size_t k = table.size();
    table.push_back(two_x * table[k - 1] - table[k - 2]);
  }
  return table;
}

MultiPoly second_kind_extended(long n) {
  if (n < -2) throw DomainError("second_kind_extended: index below -2");
  return second_kind_table(n)[static_cast<std::size_t>(n + 2)];
}

ChebPoly cheb_U(long n) {
  require_nonnegative(n, "cheb_U");
  return {ChebKind::second, n, second_kind_table(n).back()};
}

ChebCoeffPair cheb_AB(long n) {
  require_nonnegative(n, "cheb_AB");
  const auto coeffs = gcn_power_coeffs(cheb_unit(), n, PowerMethod::recurrence);
  return {n, coeffs.a_n.with_variables(cheb_variables()), coeffs.b_n.with_variables(cheb_variables())};
}

ChebPoly cheb_T(long n) {
  require_nonnegative(n, "cheb_T");
  const ChebCoeffPair ab = cheb_AB(n);
  return {ChebKind::first, n, ab.A + cheb_x() * ab.B};
}

MultiPoly second_kind_operator(const MultiPoly& y, const BigRational& eigenvalue) {
  const MultiPoly x = cheb_x();
  const MultiPoly one = MultiPoly::constant(cheb_variables(), 1);
  const MultiPoly dy = derivative(y, "x");
  const MultiPoly d2y = derivative(dy, "x");
  return (one - x * x) * d2y - x * dy * GaussianRational(3) + y * GaussianRational(eigenvalue);
}

MultiPoly verify_B_ode(long n) {
  if (n < 1) throw DomainError("verify_B_ode: n must be positive");
  return second_kind_operator(cheb_AB(n).B, BigRational(n * n - 1));
}

MultiPoly verify_U_ode(long n) {
  require_nonnegative(n, "verify_U_ode");
  return second_kind_operator(cheb_U(n).poly, BigRational(n * (n + 2)));
}

Matrix2<MultiPoly> cheb_companion_power(long n) {
  require_nonnegative(n, "cheb_companion_power");
  return companion_power(cheb_unit(), n + 1);
}

MultiPoly pell_residual(long n) {
  require_nonnegative(n, "pell_residual");
  const auto table = second_kind_table(n + 1);
  const auto u = [&](long k) -> const MultiPoly& { return table[static_cast<std::size_t>(k + 2)]; };
  return u(n) * u(n) - u(n - 1) * u(n + 1);
}

double eval_U(long n, double x) {
  const std::array<double, 1> point{x};
  return cheb_U(n).poly.evaluate(point).real();
}

double eval_T(long n, double x) {
  const std::array<double, 1> point{x};
  return cheb_T(n).poly.evaluate(point).real();
}

}  // namespace gencheb
