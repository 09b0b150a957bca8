#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "gencheb/gaussian.hpp"
#include "gencheb/matrix.hpp"

namespace gencheb {

using Mat2 = Matrix2<GaussianRational>;

/// M = alpha*1 + beta1*sigma1 + beta2*sigma2 + beta3*sigma3, with
/// gamma = -alpha^2 + sum beta_k^2 so that M^2 = gamma*1 + 2 alpha M.
struct PauliCoords {
  GaussianRational alpha;
  GaussianRational beta1;
  GaussianRational beta2;
  GaussianRational beta3;
  GaussianRational gamma;

  friend bool operator==(const PauliCoords&, const PauliCoords&) = default;
};

/// sigma1, sigma2, sigma3.
const std::array<Mat2, 3>& pauli_matrices();

PauliCoords pauli_decompose(const Mat2& m);
Mat2 pauli_recompose(const PauliCoords& c);

/// M^2 - gamma*1 - 2 alpha M; the zero matrix for every M.
Mat2 mat_quadratic_check(const Mat2& m);

enum class MatPowerMethod { chebyshev, squaring, general_recurrence };

MatPowerMethod parse_mat_power_method(const std::string& name);
const char* to_string(MatPowerMethod method);

/// U_n(x) for a scalar argument, n >= -2 (U_{-1} = 0, U_{-2} = -1).
GaussianRational second_kind_at(long n, const GaussianRational& x);

/// M^n.
///  - chebyshev: U_{n-1}(alpha) M - U_{n-2}(alpha) 1; requires det M = 1,
///    otherwise throws PreconditionError naming the determinant.
///  - squaring: binary exponentiation.
///  - general_recurrence: p_{k+1} = 2 alpha p_k + gamma p_{k-1}, M^n = p_n M + gamma p_{n-1} 1.
Mat2 mat_power(const Mat2& m, long n, MatPowerMethod method);

struct BenchRow {
  std::string method;
  long n = 0;
  double median_ns = 0.0;
  std::size_t max_coeff_bits = 0;
};

/// Median wall-clock time of the chebyshev and squaring strategies for each
/// exponent. Both results are compared and a mismatch throws std::logic_error.
/// Requires det M = 1 and trials > 0.
std::vector<BenchRow> bench_power(const Mat2& m, std::span<const long> sizes, unsigned trials);

std::size_t max_coeff_bits(const Mat2& m);

}  // namespace gencheb
