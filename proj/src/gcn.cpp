#include "gencheb/gcn.hpp"

namespace gencheb {

namespace {

std::complex<double> ipow(std::complex<double> base, long n) {
  std::complex<double> result(1.0, 0.0);
  while (n != 0) {
    if (n & 1L) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> conjugate_roots_numeric(double a, double b) {
  const std::complex<double> root = std::sqrt(std::complex<double>(b * b + 4.0 * a, 0.0));
  return {(b + root) / 2.0, (b - root) / 2.0};
}

FloatingPowerCoeffs binet_power_coeffs_floating(double a, double b, long n) {
  if (n < 0) throw DomainError("binet: negative power " + std::to_string(n));
  if (n == 0) return {1.0, 0.0, true};
  const double delta = b * b + 4.0 * a;
  if (delta == 0.0) {
    const auto b_at = [&](long k) { return k == 0 ? 0.0 : static_cast<double>(k) * std::pow(b / 2.0, k - 1); };
    return {a * b_at(n - 1), b_at(n), true};
  }
  const auto [hp, hm] = conjugate_roots_numeric(a, b);
  const std::complex<double> hp_n = ipow(hp, n);
  const std::complex<double> hm_n = ipow(hm, n);
  const std::complex<double> diff = hp - hm;
  return {((hp * hm_n - hm * hp_n) / diff).real(), ((hp_n - hm_n) / diff).real(), true};
}

PowerMethod parse_power_method(const std::string& name) {
  if (name == "recurrence") return PowerMethod::recurrence;
  if (name == "matrix") return PowerMethod::matrix;
  if (name == "binet") return PowerMethod::binet;
  throw UsageError("unknown power method '" + name + "' (expected recurrence, matrix or binet)");
}

}  // namespace gencheb
