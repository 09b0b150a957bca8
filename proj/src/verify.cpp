#include "gencheb/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gencheb/chebyshev.hpp"
#include "gencheb/euler.hpp"
#include "gencheb/gcn.hpp"
#include "gencheb/higher_order.hpp"
#include "gencheb/matrix_unit.hpp"
#include "gencheb/polytext.hpp"
#include "gencheb/random.hpp"

namespace gencheb {

namespace {

constexpr double kNumericTolerance = 1e-10;

std::string str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string case_at(const std::string& what, long n) { return what + " n=" + std::to_string(n); }

class Timer {
 public:
  explicit Timer(VerificationReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    report_.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

void check_close(VerificationReport& r, double actual, double expected, double tol, const std::string& name) {
  r.check(std::abs(actual - expected) <= tol, name, str(expected), str(actual));
}

}  // namespace

void VerificationReport::check(bool passed, const std::string& case_name, const std::string& expected,
                               const std::string& actual) {
  ++cases;
  if (!passed) failures.push_back({case_name, expected, actual});
}

void VerificationReport::absorb(const VerificationReport& other) {
  cases += other.cases;
  for (const auto& f : other.failures) failures.push_back({other.suite + ": " + f.case_name, f.expected, f.actual});
  millis += other.millis;
  parts.push_back(other);
}

VerificationReport verify_gcn(const VerifyOptions& options) {
  VerificationReport r{"gcn"};
  Timer timer(r);
  Rng rng(options.seed);
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    const GcnUnit<BigRational> unit{random_rational(rng), random_rational(rng)};
    const std::string tag = "unit(" + unit.a.to_string() + "," + unit.b.to_string() + ")";
    PowerCoeffs<BigRational> prev{1, 0};
    for (long n = 0; n <= options.nmax; ++n) {
      const auto rec = gcn_power_coeffs(unit, n, PowerMethod::recurrence);
      const auto mat = gcn_power_coeffs(unit, n, PowerMethod::matrix);
      const auto bin = gcn_power_coeffs(unit, n, PowerMethod::binet);
      r.check(rec == mat && rec == bin, case_at(tag + " methods agree", n), rec.a_n.to_string() + "," + rec.b_n.to_string(),
              mat.a_n.to_string() + "," + mat.b_n.to_string() + " / " + bin.a_n.to_string() + "," + bin.b_n.to_string());
      if (n >= 1) {
        r.check(rec.a_n == unit.a * prev.b_n, case_at(tag + " a_n = a b_{n-1}", n), (unit.a * prev.b_n).to_string(),
                rec.a_n.to_string());
      }
      const BigRational det = companion_power(unit, n).determinant();
      const BigRational expected_det = (-unit.a).pow(static_cast<unsigned>(n));
      r.check(det == expected_det, case_at(tag + " det Q^n = (-a)^n", n), expected_det.to_string(), det.to_string());
      prev = rec;
    }
  }
  const GcnUnit<MultiPoly> cheb = cheb_unit();
  for (long n = 0; n <= options.nmax; ++n) {
    const auto rec = gcn_power_coeffs(cheb, n, PowerMethod::recurrence);
    const auto mat = gcn_power_coeffs(cheb, n, PowerMethod::matrix);
    const auto bin = gcn_power_coeffs(cheb, n, PowerMethod::binet);
    r.check(rec == mat && rec == bin, case_at("symbolic unit(-1,2x) methods agree", n), render(rec.b_n),
            render(mat.b_n) + " / " + render(bin.b_n));
  }
  return r;
}

VerificationReport verify_euler(const VerifyOptions& options) {
  VerificationReport r{"euler"};
  Timer timer(r);
  Rng rng(options.seed);
  // Sum well past the comparison tolerance so truncation never competes with it.
  const double tol = options.tol * 1e-3;
  const GcnUnit<double> imaginary{-1.0, 0.0};
  for (int k = 0; k < 100; ++k) {
    const double phi = -std::numbers::pi + 2.0 * std::numbers::pi * k / 99.0;
    const EulerPair e = euler_series(imaginary, phi, tol);
    check_close(r, e.C, std::cos(phi), 1e-12, "cos phi=" + str(phi));
    check_close(r, e.S, std::sin(phi), 1e-12, "sin phi=" + str(phi));
  }
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(-2.0 + 4.0 * k / 40.0);
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    const GcnUnit<double> unit{coeff(rng), coeff(rng)};
    const std::string tag = "unit(" + str(unit.a) + "," + str(unit.b) + ")";
    const OdeResidualReport ode = ode_residual(unit, grid, tol);
    r.check(ode.max_c_residual <= kNumericTolerance, tag + " C' = aS", "<= 1e-10", str(ode.max_c_residual));
    r.check(ode.max_s_residual <= kNumericTolerance, tag + " S' = C + bS", "<= 1e-10", str(ode.max_s_residual));
    const EulerPair zero = euler_series(unit, 0.0, tol);
    r.check(zero.C == 1.0 && zero.S == 0.0, tag + " C(0)=1, S(0)=0", "1,0", str(zero.C) + "," + str(zero.S));
    for (int k = 0; k < 5; ++k) {
      const double phi = angle(rng);
      const double psi = angle(rng);
      const EulerPair ep = euler_series(unit, phi, tol);
      const EulerPair es = euler_series(unit, psi, tol);
      const EulerPair sum = euler_series(unit, phi + psi, tol);
      check_close(r, sum.C, ep.C * es.C + unit.a * ep.S * es.S, kNumericTolerance, tag + " addition law C");
      check_close(r, sum.S, ep.C * es.S + ep.S * es.C + unit.b * ep.S * es.S, kNumericTolerance,
                  tag + " addition law S");
      const EulerPair closed = euler_closed_form(unit, phi);
      check_close(r, closed.C, ep.C, kNumericTolerance, tag + " closed form C phi=" + str(phi));
      check_close(r, closed.S, ep.S, kNumericTolerance, tag + " closed form S phi=" + str(phi));
    }
  }
  return r;
}

VerificationReport verify_cheb(const VerifyOptions& options) {
  VerificationReport r{"cheb"};
  Timer timer(r);
  const long nmax = options.nmax;
  const auto u_table = second_kind_table(nmax + 1);
  const auto U = [&](long k) -> const MultiPoly& { return u_table[static_cast<std::size_t>(k + 2)]; };
  const MultiPoly x = cheb_x();
  const MultiPoly one = MultiPoly::constant(cheb_variables(), 1);
  for (long n = 0; n <= nmax; ++n) {
    const MultiPoly pell = U(n) * U(n) - U(n - 1) * U(n + 1);
    r.check(pell == one, case_at("U_n^2 - U_{n-1}U_{n+1} = 1", n), "1", render(pell));

    const ChebCoeffPair ab = cheb_AB(n);
    const ChebCoeffPair ab_next = cheb_AB(n + 1);
    r.check(ab.B == U(n - 1), case_at("B_n = U_{n-1}", n), render(U(n - 1)), render(ab.B));
    r.check(ab.B == -ab_next.A, case_at("B_n = -A_{n+1}", n), render(-ab_next.A), render(ab.B));
    r.check(ab.A == -U(n - 2), case_at("A_n = -U_{n-2}", n), render(-U(n - 2)), render(ab.A));
    const MultiPoly norm = ab.A * ab.A + x * ab.A * ab.B * GaussianRational(2) + ab.B * ab.B;
    r.check(norm == one, case_at("A_n^2 + 2x A_n B_n + B_n^2 = 1", n), "1", render(norm));

    const Matrix2<MultiPoly> q = cheb_companion_power(n);
    const Matrix2<MultiPoly> expected{{-U(n - 1), -U(n)}, {U(n), U(n + 1)}};
    r.check(q == expected, case_at("Q(-1,2x)^(n+1)", n), str(expected), str(q));

    const MultiPoly t = cheb_T(n).poly;
    const MultiPoly t_id = t * t - (x * x - one) * U(n - 1) * U(n - 1);
    r.check(t_id == one, case_at("T_n^2 - (x^2-1) U_{n-1}^2 = 1", n), "1", render(t_id));

    const MultiPoly u_ode = second_kind_operator(U(n), BigRational(n * (n + 2)));
    r.check(u_ode.is_zero(), case_at("U_n ODE", n), "0", render(u_ode));
    if (n >= 1) {
      const MultiPoly b_ode = verify_B_ode(n);
      r.check(b_ode.is_zero(), case_at("B_n ODE", n), "0", render(b_ode));
    }
    for (int k = 0; k < 10; ++k) {
      const double theta = 0.1 + 2.9 * k / 9.0;
      const std::array<double, 1> at{std::cos(theta)};
      const double u_val = U(n).evaluate(at).real();
      const double t_val = t.evaluate(at).real();
      check_close(r, u_val * std::sin(theta), std::sin((n + 1) * theta), kNumericTolerance,
                  case_at("U_n(cos t) sin t = sin((n+1)t) t=" + str(theta), n));
      check_close(r, t_val, std::cos(n * theta), kNumericTolerance, case_at("T_n(cos t) = cos(nt) t=" + str(theta), n));
    }
  }
  return r;
}

VerificationReport verify_mat(const VerifyOptions& options) {
  VerificationReport r{"mat"};
  Timer timer(r);
  Rng rng(options.seed);
  const auto& sigma = pauli_matrices();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Mat2 anti = sigma[i] * sigma[j] + sigma[j] * sigma[i];
      const Mat2 expected = i == j ? GaussianRational(2) * Mat2::identity() : Mat2{};
      r.check(anti == expected, "{sigma" + std::to_string(i + 1) + ", sigma" + std::to_string(j + 1) + "}",
              str(expected), str(anti));
    }
  }
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    const Mat2 m = random_mat2(rng);
    const PauliCoords c = pauli_decompose(m);
    r.check(pauli_recompose(c) == m, "recompose(decompose(M)) " + str(m), str(m), str(pauli_recompose(c)));
    r.check(c.gamma == -m.determinant(), "gamma = -det " + str(m), str(-m.determinant()), str(c.gamma));
    const Mat2 ch = mat_quadratic_check(m);
    r.check(ch.is_zero(), "M^2 - gamma - 2 alpha M = 0 " + str(m), "0", str(ch));
    bool rejected = m.determinant().is_one();
    try {
      (void)mat_power(m, 2, MatPowerMethod::chebyshev);
    } catch (const PreconditionError&) {
      rejected = true;
    }
    r.check(rejected, "chebyshev rejects det != 1 " + str(m), "PreconditionError", "accepted");
  }
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    const Mat2 m = random_unimodular(rng);
    for (long n = 0; n <= options.nmax; ++n) {
      const Mat2 sq = mat_power(m, n, MatPowerMethod::squaring);
      const Mat2 ch = mat_power(m, n, MatPowerMethod::chebyshev);
      const Mat2 gr = mat_power(m, n, MatPowerMethod::general_recurrence);
      r.check(sq == ch && sq == gr, case_at("M^n methods agree " + str(m), n), str(sq), str(ch) + " / " + str(gr));
    }
  }
  return r;
}

VerificationReport verify_u2(const VerifyOptions& options) {
  VerificationReport r{"u2"};
  Timer timer(r);
  const long nmax = std::max(options.nmax, 4L);
  const auto series = u2_by_series(nmax);
  const auto rec = u2_by_recurrence(nmax);
  const auto& vars = u2_variables();
  const std::array<const char*, 4> first{"1", "u", "u^2 - v", "u^3 - 2*u*v + 1"};
  for (long n = 1; n <= 4; ++n) {
    const MultiPoly expected = parse_poly(first[static_cast<std::size_t>(n - 1)], vars);
    r.check(series[static_cast<std::size_t>(n)].poly == expected, case_at("U2 first values", n), render(expected),
            render(series[static_cast<std::size_t>(n)].poly));
  }
  const CubicUnit unit = symbolic_cubic_unit();
  for (long n = 0; n <= nmax; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    r.check(series[idx].poly == rec[idx].poly, case_at("U2 series = recurrence", n), render(series[idx].poly),
            render(rec[idx].poly));
    if (n >= 1) {
      const TwoVarCheb lap = u2_by_laplace(n - 1);
      r.check(lap.poly == series[idx].poly, case_at("U2 laplace = series", n), render(series[idx].poly),
              render(lap.poly));
    }
    const CubicPowerCoeffs red = cubic_power(unit, n);
    const CubicPowerCoeffs mat = cubic_power_by_matrix(unit, n);
    r.check(red == mat, case_at("Y^n reduction = companion", n), render(red.gamma), render(mat.gamma));
    const MultiPoly& prev = n == 0 ? MultiPoly(vars) : series[idx - 1].poly;
    r.check(red.gamma == prev, case_at("gamma_n = U2_{n-1}", n), render(prev), render(red.gamma));
  }
  const long order = std::min(nmax, 12L);
  const auto by_series = hermite3_by_series(order);
  for (long n = 0; n <= order; ++n) {
    const MultiPoly direct = hermite3(n);
    r.check(direct == by_series[static_cast<std::size_t>(n)], case_at("H3 triple sum = exp series", n),
            render(by_series[static_cast<std::size_t>(n)]), render(direct));
  }
  return r;
}

VerificationReport verify_all(const VerifyOptions& options) {
  VerificationReport all{"all"};
  all.absorb(verify_gcn(options));
  all.absorb(verify_euler(options));
  all.absorb(verify_cheb(options));
  all.absorb(verify_mat(options));
  all.absorb(verify_u2(options));
  return all;
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"case", f.case_name}, {"expected", f.expected}, {"actual", f.actual}});
  }
  nlohmann::json out = {{"schema", 1},
                        {"suite", report.suite},
                        {"cases", report.cases},
                        {"failures", failures},
                        {"millis", with_timing ? report.millis : 0.0}};
  if (!report.parts.empty()) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : report.parts) {
      parts.push_back({{"suite", p.suite},
                       {"cases", p.cases},
                       {"failures", p.failures.size()},
                       {"millis", with_timing ? p.millis : 0.0}});
    }
    out["suites"] = parts;
  }
  return out;
}

}  // namespace gencheb
