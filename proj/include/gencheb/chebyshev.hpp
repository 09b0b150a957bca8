#pragma once

#include <vector>

#include "gencheb/bigrational.hpp"
#include "gencheb/gcn.hpp"
#include "gencheb/multipoly.hpp"

namespace gencheb {

/// The ring Q[x] the one-variable Chebyshev families live in.
const std::vector<std::string>& cheb_variables();
MultiPoly cheb_x();

/// H^2 = 2x H - 1, i.e. the unit (a, b) = (-1, 2x).
GcnUnit<MultiPoly> cheb_unit();

enum class ChebKind { first, second };

struct ChebPoly {
  ChebKind kind;
  long n;
  MultiPoly poly;
};

/// H±^n = A_n + H± B_n.
struct ChebCoeffPair {
  long n;
  MultiPoly A;
  MultiPoly B;
};

/// U_n by U_{n+1} = 2x U_n - U_{n-1}, U_0 = 1, U_1 = 2x. Throws DomainError for n < 0.
ChebPoly cheb_U(long n);

/// T_n computed as A_n + x B_n.
ChebPoly cheb_T(long n);

/// U_n for n >= -2, with the backward seeds U_{-1} = 0 and U_{-2} = -1.
MultiPoly second_kind_extended(long n);

/// U_{-2}, U_{-1}, U_0, ..., U_{n_max}; element k holds U_{k-2}.
std::vector<MultiPoly> second_kind_table(long n_max);

/// A_n, B_n from the column recurrence (A, B) <- Q(-1, 2x) (A, B), (A_0, B_0) = (1, 0).
ChebCoeffPair cheb_AB(long n);

/// [(1 - x^2) d^2/dx^2 - 3x d/dx + eigenvalue] applied to y.
MultiPoly second_kind_operator(const MultiPoly& y, const BigRational& eigenvalue);

/// Residual of the B_n equation, whose eigenvalue is n^2 - 1 (B_n = U_{n-1}). Zero polynomial when it holds.
MultiPoly verify_B_ode(long n);

/// Residual of [(1 - x^2) d^2 - 3x d + n(n+2)] U_n.
MultiPoly verify_U_ode(long n);

/// Q(-1, 2x)^(n+1), which equals [[-U_{n-1}, -U_n], [U_n, U_{n+1}]].
Matrix2<MultiPoly> cheb_companion_power(long n);

/// U_n^2 - U_{n-1} U_{n+1}; the constant 1 for every n >= 0.
MultiPoly pell_residual(long n);

/// U_n(x) and T_n(x) evaluated numerically via the exact polynomial.
double eval_U(long n, double x);
double eval_T(long n, double x);

}  // namespace gencheb
