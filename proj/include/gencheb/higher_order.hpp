#pragma once

#include <array>
#include <vector>

#include "gencheb/matrix.hpp"
#include "gencheb/multipoly.hpp"
#include "gencheb/series.hpp"

namespace gencheb {

/// Ring Q[u, v] of the two-variable Chebyshev family.
const std::vector<std::string>& u2_variables();
/// Ring Q[x, y, z] of the third-order Hermite family.
const std::vector<std::string>& hermite3_variables();

/// Third-order unit Y^3 = u Y^2 - v Y + 1.
struct CubicUnit {
  MultiPoly u;
  MultiPoly v;
};

/// The symbolic unit with u, v the generators of Q[u, v].
CubicUnit symbolic_cubic_unit();

/// Y^n = alpha_n + beta_n Y + gamma_n Y^2.
struct CubicPowerCoeffs {
  long n = 0;
  MultiPoly alpha;
  MultiPoly beta;
  MultiPoly gamma;

  friend bool operator==(const CubicPowerCoeffs&, const CubicPowerCoeffs&) = default;
};

/// [[0, 0, 1], [1, 0, -v], [0, 1, u]]; maps (alpha_n, beta_n, gamma_n) to index n + 1.
Matrix3<MultiPoly> cubic_companion(const CubicUnit& unit);

/// Y^n by repeated reduction:
///   alpha_{n+1} = gamma_n, beta_{n+1} = alpha_n - v gamma_n, gamma_{n+1} = beta_n + u gamma_n.
CubicPowerCoeffs cubic_power(const CubicUnit& unit, long n);

/// Y^n as the first column of the companion matrix raised to n.
CubicPowerCoeffs cubic_power_by_matrix(const CubicUnit& unit, long n);

struct TwoVarCheb {
  long n = 0;
  MultiPoly poly;
};

/// U^(2)_0 .. U^(2)_{n_max} (element k has index k) from the coefficients of
/// 1 / (1 - u t + v t^2 - t^3): U^(2)_{k+1} = [t^k]. U^(2)_0 = 0 is the seed
/// the generating function implies.
std::vector<TwoVarCheb> u2_by_series(long n_max);

/// U^(2)_0 .. U^(2)_{n_max} from U_{n+2} = u U_{n+1} - v U_n + U_{n-1}, with
/// seeds (U_0, U_1, U_2) and U_{-1} = 0.
std::vector<TwoVarCheb> u2_by_recurrence(long n_max, const std::array<MultiPoly, 3>& seeds);
/// Seeds (0, 1, u).
std::vector<TwoVarCheb> u2_by_recurrence(long n_max);

/// H^(3)_n(x, y, z) = n! sum_{p + 2q + 3r = n} x^p y^q z^r / (p! q! r!).
MultiPoly hermite3(long n);

/// H^(3)_0 .. H^(3)_order read off exp(x t + y t^2 + z t^3) as n! [t^n].
std::vector<MultiPoly> hermite3_by_series(long order);

/// The Laplace functional on one variable: s^m -> m!, i.e. the integral of
/// s^m e^{-s} over [0, inf). `var` is dropped from the result's ring.
MultiPoly gamma_integrate(const MultiPoly& p, std::string_view var);

/// U^(2)_{n+1}(u, v) = (1/n!) int_0^inf e^{-s} H^(3)_n(u s, -v s, s) ds, exactly.
TwoVarCheb u2_by_laplace(long n);

}  // namespace gencheb
