#include "gencheb/higher_order.hpp"

#include "gencheb/errors.hpp"

namespace gencheb {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": index must be non-negative, got " + std::to_string(n));
}

MultiPoly u2_constant(long c) { return MultiPoly::constant(u2_variables(), c); }

}  // namespace

const std::vector<std::string>& u2_variables() {
  static const std::vector<std::string> vars{"u", "v"};
  return vars;
}

const std::vector<std::string>& hermite3_variables() {
  static const std::vector<std::string> vars{"x", "y", "z"};
  return vars;
}

CubicUnit symbolic_cubic_unit() {
  return {MultiPoly::variable(u2_variables(), "u"), MultiPoly::variable(u2_variables(), "v")};
}

Matrix3<MultiPoly> cubic_companion(const CubicUnit& unit) {
  return Matrix3<MultiPoly>{{0, 0, 1}, {1, 0, -unit.v}, {0, 1, unit.u}};
}

CubicPowerCoeffs cubic_power(const CubicUnit& unit, long n) {
  require_nonnegative(n, "cubic_power");
  CubicPowerCoeffs c{0, MultiPoly(1), MultiPoly(0), MultiPoly(0)};
  for (long k = 0; k < n; ++k) {
    MultiPoly alpha = c.gamma;
    MultiPoly beta = c.alpha - unit.v * c.gamma;
    MultiPoly gamma = c.beta + unit.u * c.gamma;
    c = {k + 1, std::move(alpha), std::move(beta), std::move(gamma)};
  }
  return c;
}

CubicPowerCoeffs cubic_power_by_matrix(const CubicUnit& unit, long n) {
  require_nonnegative(n, "cubic_power_by_matrix");
  const Matrix3<MultiPoly> p = matrix_power(cubic_companion(unit), n);
  return {n, p(0, 0), p(1, 0), p(2, 0)};
}

std::vector<TwoVarCheb> u2_by_series(long n_max) {
  if (n_max < 1) throw DomainError("u2_by_series: n_max must be at least 1");
  const auto order = static_cast<std::size_t>(n_max - 1);
  const CubicUnit unit = symbolic_cubic_unit();
  std::vector<MultiPoly> denom(4);
  denom[0] = u2_constant(1);
  denom[1] = -unit.u;
  denom[2] = unit.v;
  denom[3] = u2_constant(-1);
  const TruncatedSeries inverse = series_inverse(TruncatedSeries(order, std::move(denom)));

  std::vector<TwoVarCheb> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  out.push_back({0, MultiPoly(u2_variables())});
  for (std::size_t k = 0; k <= order; ++k) {
    out.push_back({static_cast<long>(k + 1), inverse[k].with_variables(u2_variables())});
  }
  return out;
}

std::vector<TwoVarCheb> u2_by_recurrence(long n_max, const std::array<MultiPoly, 3>& seeds) {
  require_nonnegative(n_max, "u2_by_recurrence");
  const CubicUnit unit = symbolic_cubic_unit();
  std::vector<MultiPoly> values;
  values.reserve(static_cast<std::size_t>(n_max + 2));
  values.push_back(MultiPoly(u2_variables()));  // U_{-1}
  for (const auto& s : seeds) values.push_back(s.with_variables(u2_variables()));
  while (static_cast<long>(values.size()) < n_max + 2) {
    const std::size_t k = values.size();
    values.push_back(unit.u * values[k - 1] - unit.v * values[k - 2] + values[k - 3]);
  }
  std::vector<TwoVarCheb> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) out.push_back({n, values[static_cast<std::size_t>(n + 1)]});
  return out;
}

std::vector<TwoVarCheb> u2_by_recurrence(long n_max) {
  return u2_by_recurrence(n_max, {MultiPoly(0), MultiPoly(1), symbolic_cubic_unit().u});
}

MultiPoly hermite3(long n) {
  require_nonnegative(n, "hermite3");
  const auto& vars = hermite3_variables();
  const BigRational n_fact = BigRational::factorial(static_cast<unsigned>(n));
  MultiPoly out(vars);
  for (long r = 0; 3 * r <= n; ++r) {
    for (long q = 0; 2 * q + 3 * r <= n; ++q) {
      const long p = n - 2 * q - 3 * r;
      const BigRational coeff = n_fact / (BigRational::factorial(static_cast<unsigned>(p)) *
                                          BigRational::factorial(static_cast<unsigned>(q)) *
                                          BigRational::factorial(static_cast<unsigned>(r)));
      out += MultiPoly::monomial(
          vars, {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(r)}, coeff);
    }
  }
  return out;
}

std::vector<MultiPoly> hermite3_by_series(long order) {
  require_nonnegative(order, "hermite3_by_series");
  const auto& vars = hermite3_variables();
  std::vector<MultiPoly> exponent(4);
  exponent[1] = MultiPoly::variable(vars, "x");
  exponent[2] = MultiPoly::variable(vars, "y");
  exponent[3] = MultiPoly::variable(vars, "z");
  const TruncatedSeries e = series_exp(TruncatedSeries(static_cast<std::size_t>(order), std::move(exponent)));
  std::vector<MultiPoly> out;
  out.reserve(static_cast<std::size_t>(order + 1));
  for (long n = 0; n <= order; ++n) {
    out.push_back((e[static_cast<std::size_t>(n)] * BigRational::factorial(static_cast<unsigned>(n)))
                      .with_variables(vars));
  }
  return out;
}

MultiPoly gamma_integrate(const MultiPoly& p, std::string_view var) {
  const std::size_t k = p.var_index(var);
  std::vector<std::string> rest;
  for (std::size_t j = 0; j < p.variables().size(); ++j) {
    if (j != k) rest.push_back(p.variables()[j]);
  }
  MultiPoly out(rest);
  for (const auto& [m, c] : p.terms()) {
    Monomial reduced;
    reduced.reserve(rest.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != k) reduced.push_back(m[j]);
    }
    out += MultiPoly::monomial(rest, std::move(reduced), c * GaussianRational(BigRational::factorial(m[k])));
  }
  return out;
}

TwoVarCheb u2_by_laplace(long n) {
  require_nonnegative(n, "u2_by_laplace");
  const std::vector<std::string> vars{"u", "v", "s"};
  const MultiPoly u = MultiPoly::variable(vars, "u");
  const MultiPoly v = MultiPoly::variable(vars, "v");
  const MultiPoly s = MultiPoly::variable(vars, "s");
  const std::array<MultiPoly, 3> images{u * s, -(v * s), s};
  const MultiPoly integrand = substitute(hermite3(n), images).with_variables(vars);
  const MultiPoly integral = gamma_integrate(integrand, "s");
  const GaussianRational scale(BigRational::factorial(static_cast<unsigned>(n)).inverse());
  return {n + 1, (integral * scale).with_variables(u2_variables())};
}

}  // namespace gencheb
