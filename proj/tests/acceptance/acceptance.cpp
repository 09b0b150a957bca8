// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <sys/wait.h>

#include "gencheb/chebyshev.hpp"
#include "gencheb/euler.hpp"
#include "gencheb/gcn.hpp"
#include "gencheb/higher_order.hpp"
#include "gencheb/matrix_unit.hpp"
#include "gencheb/polytext.hpp"
#include "gencheb/random.hpp"
#include "support/dense_poly.hpp"

using namespace gencheb;

namespace {

// Pinned tolerances.
constexpr double kBinetTol = 1e-10;  // relative to the scale below
constexpr double kTrigTol = 1e-12;
constexpr double kOdeTol = 1e-10;
constexpr double kAdditionTol = 1e-10;
constexpr double kChebNumericTol = 1e-10;
constexpr double kSeriesTol = 1e-15;

struct Criterion {
  int id;
  const char* title;
  std::function<std::string()> body;  // empty string = pass, otherwise the first failure
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// --- 1 ----------------------------------------------------------------------

std::string power_coefficients() {
  Rng rng(101);
  for (int k = 0; k < 50; ++k) {
    const GcnUnit<BigRational> unit{random_rational(rng), random_rational(rng)};
    const double a = unit.a.to_double();
    const double b = unit.b.to_double();
    const auto [hp, hm] = conjugate_roots_numeric(a, b);
    const double rho = std::max({1.0, std::abs(hp), std::abs(hm)});
    const double root_gap = std::abs(hp - hm);
    for (long n = 0; n <= 64; ++n) {
      const auto rec = gcn_power_coeffs(unit, n, PowerMethod::recurrence);
      if (rec != gcn_power_coeffs(unit, n, PowerMethod::matrix))
        return "matrix route differs at unit " + std::to_string(k) + ", n=" + std::to_string(n);
      if (rec != gcn_power_coeffs(unit, n, PowerMethod::binet))
        return "surd Binet differs at unit " + std::to_string(k) + ", n=" + std::to_string(n);
      const auto fl = binet_power_coeffs_floating(a, b, n);
      // Rounding in h±^n is amplified by 1/|h+ - h-|; absolute 1e-10 is not representable
      // once |a_n| exceeds ~1e6, so the bound scales with the size of the roots.
      double scale = std::pow(rho, static_cast<double>(n)) * (1.0 + rho);
      if (!unit.discriminant().is_zero()) scale /= std::min(1.0, root_gap);
      const double err = std::max(std::abs(fl.a_n - rec.a_n.to_double()), std::abs(fl.b_n - rec.b_n.to_double()));
      if (err > kBinetTol * scale)
        return "floating Binet error " + fmt(err) + " > " + fmt(kBinetTol * scale) + " at n=" + std::to_string(n);
    }
  }
  return {};
}

// --- 2 ----------------------------------------------------------------------

std::string euler_sector() {
  const GcnUnit<double> trig{-1.0, 0.0};
  for (int k = 0; k < 100; ++k) {
    const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * k / 99.0;
    const EulerPair p = euler_series(trig, phi, kSeriesTol);
    const double err = std::max(std::abs(p.C - std::cos(phi)), std::abs(p.S - std::sin(phi)));
    if (err > kTrigTol) return "cos/sin error " + fmt(err) + " at phi=" + fmt(phi);
  }

  Rng rng(202);
  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(-2.0 + 4.0 * k / 40.0);
  std::vector<GcnUnit<double>> units;
  for (int k = 0; k < 20; ++k) units.push_back({random_rational(rng, 2, 3).to_double(), random_rational(rng, 2, 3).to_double()});
  for (const auto& unit : units) {
    const OdeResidualReport r = ode_residual(unit, grid, kSeriesTol);
    const double worst = std::max(r.max_c_residual, r.max_s_residual);
    if (worst > kOdeTol) return "ODE residual " + fmt(worst) + " for unit (" + fmt(unit.a) + ", " + fmt(unit.b) + ")";
  }

  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const GcnUnit<double>& unit = units[static_cast<std::size_t>(k) % units.size()];
    const double phi = angle(rng);
    const double psi = angle(rng);
    const EulerPair x = euler_series(unit, phi, kSeriesTol);
    const EulerPair y = euler_series(unit, psi, kSeriesTol);
    const EulerPair xy = euler_series(unit, phi + psi, kSeriesTol);
    // (C1 + h S1)(C2 + h S2) with h^2 = a + b h.
    const double c = x.C * y.C + unit.a * x.S * y.S;
    const double s = x.C * y.S + x.S * y.C + unit.b * x.S * y.S;
    const double err = std::max(std::abs(xy.C - c), std::abs(xy.S - s));
    if (err > kAdditionTol) return "addition-law residual " + fmt(err);
  }
  return {};
}

// --- 3 ----------------------------------------------------------------------

std::string chebyshev_exact() {
  const MultiPoly x = cheb_x();
  const MultiPoly one(GaussianRational(1));
  for (long n = 0; n <= 64; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const MultiPoly u_n = cheb_U(n).poly;
    if (u_n != testing::to_multipoly(testing::dense_U(n))) return "U_n differs from the dense oracle" + at;
    if (pell_residual(n) != one) return "Pell identity fails" + at;
    const MultiPoly u_prev = second_kind_extended(n - 1);
    const MultiPoly u_next = cheb_U(n + 1).poly;
    if (u_n * u_n - u_prev * u_next != one) return "U_n^2 - U_{n-1} U_{n+1} != 1" + at;
    const ChebCoeffPair ab = cheb_AB(n);
    if (ab.B != u_prev) return "B_n != U_{n-1}" + at;
    if (ab.B != -cheb_AB(n + 1).A) return "B_n != -A_{n+1}" + at;
    if (ab.A * ab.A + GaussianRational(2) * x * ab.A * ab.B + ab.B * ab.B != one) return "A^2 + 2xAB + B^2 != 1" + at;
    const Matrix2<MultiPoly> expected{{-u_prev, -u_n}, {u_n, u_next}};
    if (cheb_companion_power(n) != expected) return "Q(-1,2x)^(n+1) closed form" + at;
    if (n <= 32 && !verify_U_ode(n).is_zero()) return "U ODE residual nonzero" + at;
  }
  return {};
}

// --- 4 ----------------------------------------------------------------------

std::string chebyshev_numeric() {
  for (int k = 0; k < 50; ++k) {
    const double theta = std::numbers::pi * (k + 0.5) / 50.0;
    const double c = std::cos(theta);
    for (long n = 0; n <= 32; ++n) {
      const double du = std::abs(eval_U(n, c) * std::sin(theta) - std::sin((n + 1) * theta));
      const double dt = std::abs(eval_T(n, c) - std::cos(n * theta));
      if (du > kChebNumericTol || dt > kChebNumericTol)
        return "n=" + std::to_string(n) + " theta=" + fmt(theta) + " errors " + fmt(du) + ", " + fmt(dt);
    }
  }
  return {};
}

// --- 5 ----------------------------------------------------------------------

std::string matrix_sector() {
  Rng rng(505);
  for (int k = 0; k < 200; ++k) {
    if (!mat_quadratic_check(random_mat2(rng)).is_zero()) return "Cayley-Hamilton residual nonzero";
  }
  for (int k = 0; k < 200; ++k) {
    const Mat2 m = random_unimodular(rng);
    for (long n = 0; n <= 32; ++n) {
      if (mat_power(m, n, MatPowerMethod::chebyshev) != mat_power(m, n, MatPowerMethod::squaring))
        return "closed form differs from squaring at n=" + std::to_string(n);
    }
  }
  try {
    (void)mat_power(Mat2{{1, 1}, {0, 2}}, 3, MatPowerMethod::chebyshev);
    return "det = 2 was not rejected";
  } catch (const PreconditionError&) {
  }
  return {};
}

// --- 6 ----------------------------------------------------------------------

std::string higher_order() {
  // Long division of 1 by 1 - u t + v t^2 - t^3, term by term.
  const MultiPoly u = MultiPoly::variable(u2_variables(), "u");
  const MultiPoly v = MultiPoly::variable(u2_variables(), "v");
  const std::array<MultiPoly, 4> d{MultiPoly(1), -u, v, MultiPoly(-1)};
  std::vector<MultiPoly> q;
  for (std::size_t k = 0; k < 4; ++k) {
    MultiPoly rem = k == 0 ? MultiPoly(1) : MultiPoly(0);
    for (std::size_t j = 1; j <= k && j < 4; ++j) rem = rem - d[j] * q[k - j];
    q.push_back(rem);
  }
  const std::array<const char*, 4> first{"1", "u", "u^2 - v", "u^3 - 2*u*v + 1"};
  for (std::size_t k = 0; k < 4; ++k) {
    if (q[k] != parse_poly(first[k], u2_variables())) return "long division gives " + render(q[k]) + " for U_" + std::to_string(k + 1);
  }

  const long nmax = 24;
  const auto s = u2_by_series(nmax);
  const auto r = u2_by_recurrence(nmax);
  for (std::size_t k = 0; k < 4; ++k) {
    if (s[k + 1].poly != q[k]) return "series route disagrees with long division at n=" + std::to_string(k + 1);
  }
  const CubicUnit unit = symbolic_cubic_unit();
  for (long n = 0; n <= nmax; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const std::string at = " at n=" + std::to_string(n);
    if (s[idx].poly != r[idx].poly) return "series != recurrence" + at;
    if (n >= 1 && u2_by_laplace(n - 1).poly != s[idx].poly) return "Laplace route differs" + at;
    const MultiPoly gamma_expected = n == 0 ? MultiPoly(0) : s[idx - 1].poly;
    if (cubic_power(unit, n).gamma != gamma_expected) return "gamma_n != U_{n-1}" + at;
  }
  const auto h = hermite3_by_series(12);
  for (long n = 0; n <= 12; ++n) {
    if (hermite3(n) != h[static_cast<std::size_t>(n)]) return "Hermite generating function differs at n=" + std::to_string(n);
  }
  return {};
}

// --- 7 ----------------------------------------------------------------------

std::string uncorrected_forms() {
  // C/S: h+ e^{h+ phi} + h- e^{h- phi} and (e^{h+ phi} + e^{h- phi}) / (h+ + h-) at unit (1, 1), phi = 1.
  {
    const GcnUnit<double> unit{1.0, 1.0};
    const double hp = (1.0 + std::sqrt(5.0)) / 2.0;
    const double hm = (1.0 - std::sqrt(5.0)) / 2.0;
    const EulerPair truth = euler_series(unit, 1.0, kSeriesTol);
    const double uncorrected_c = hp * std::exp(hp) + hm * std::exp(hm);
    const double uncorrected_s = (std::exp(hp) + std::exp(hm)) / (hp + hm);
    if (std::abs(uncorrected_c - truth.C) < 1e-3 || std::abs(uncorrected_s - truth.S) < 1e-3)
      return "uncorrected C/S unexpectedly matches the series";
    const EulerPair corrected = euler_closed_form(unit, 1.0);
    if (std::abs(corrected.C - truth.C) > 1e-12 || std::abs(corrected.S - truth.S) > 1e-12)
      return "corrected C/S does not match the series";
  }
  // Q(1, -2x) vs Q(-1, 2x).
  {
    const MultiPoly x = cheb_x();
    const GcnUnit<MultiPoly> uncorrected{MultiPoly(1), GaussianRational(-2) * x};
    if (companion(uncorrected).determinant() != MultiPoly(-1)) return "uncorrected Q determinant is not -1";
    if (companion_power(uncorrected, 2) == cheb_companion_power(1)) return "uncorrected Q reproduces the Chebyshev matrix";
    const Matrix2<MultiPoly> expected{{-cheb_U(0).poly, -cheb_U(1).poly}, {cheb_U(1).poly, cheb_U(2).poly}};
    if (companion_power(cheb_unit(), 2) != expected) return "corrected Q power differs";
  }
  // M^n sign at n = 2 for [[2, 1], [1, 1]].
  {
    const Mat2 m{{2, 1}, {1, 1}};
    const GaussianRational alpha(BigRational(3, 2));
    const Mat2 uncorrected = second_kind_at(1, alpha) * m + second_kind_at(0, alpha) * Mat2::identity();
    if (uncorrected == m * m) return "uncorrected M^n sign matches";
    const Mat2 corrected = second_kind_at(1, alpha) * m - second_kind_at(0, alpha) * Mat2::identity();
    if (corrected != m * m || mat_power(m, 2, MatPowerMethod::chebyshev) != m * m) return "corrected M^n sign fails";
  }
  // B_n eigenvalue: (n - 1)^2 fails at n = 2, n^2 - 1 annihilates.
  if (second_kind_operator(cheb_AB(2).B, BigRational(1)).is_zero()) return "(n-1)^2 eigenvalue unexpectedly works";
  for (long n = 1; n <= 32; ++n) {
    if (!verify_B_ode(n).is_zero()) return "B ODE with n^2 - 1 fails at n=" + std::to_string(n);
  }
  return {};
}

// --- 8 ----------------------------------------------------------------------

struct Captured {
  int code = -1;
  std::string out;
};

Captured run_cli_binary(const std::string& args) {
  const std::string command = std::string(GENCHEB_CLI_PATH) + " " + args + " 2>/dev/null";
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), got);
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string cli() {
  const Captured first = run_cli_binary("verify all --nmax 24");
  if (first.code != 0) return "verify all exited " + std::to_string(first.code);
  const Captured second = run_cli_binary("verify all --nmax 24");
  if (second.out != first.out) return "two runs differ";
  const Captured json1 = run_cli_binary("verify all --nmax 24 --format json");
  const Captured json2 = run_cli_binary("verify all --nmax 24 --format json");
  if (json1.code != 0 || json1.out != json2.out) return "json runs differ";
  const Captured bad = run_cli_binary("gcn pow --a 'x +' --b 1 --n 2");
  if (bad.code != 2) return "malformed polynomial exited " + std::to_string(bad.code);
  const Captured neg = run_cli_binary("cheb u --n -1");
  if (neg.code != 2) return "negative index exited " + std::to_string(neg.code);
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "power coefficients: recurrence = matrix = Binet", power_coefficients},
      {2, "Euler pair: trig limit, ODE, addition law", euler_sector},
      {3, "Chebyshev exact identities", chebyshev_exact},
      {4, "Chebyshev numeric forms", chebyshev_numeric},
      {5, "matrix powers", matrix_sector},
      {6, "two-variable Chebyshev and Hermite", higher_order},
      {7, "uncorrected forms fail, corrected forms hold", uncorrected_forms},
      {8, "command line", cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty()) {
      std::cout << "PASS " << c.id << " " << c.title << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << c.id << " " << c.title << ": " << why << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
