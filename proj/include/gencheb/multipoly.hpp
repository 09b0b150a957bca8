#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gencheb/gaussian.hpp"

namespace gencheb {

/// Exponent tuple, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
///
/// The variable list is fixed at construction. Two polynomials over different
/// variable lists cannot be combined; use with_variables() to align them
/// first. The one exception is a polynomial over the empty variable list (a
/// bare constant), which is promoted into whatever ring it meets.
///
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, GaussianRational>;

  MultiPoly();
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  MultiPoly(I c) : MultiPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly constant(std::vector<std::string> variables, const GaussianRational& c);
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name);
  static MultiPoly monomial(std::vector<std::string> variables, Monomial exponents,
                            const GaussianRational& c);

  const std::vector<std::string>& variables() const { return *vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Index of `name` in the variable list; throws UsageError if absent.
  std::size_t var_index(std::string_view name) const;
  bool has_variable(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussianRational constant_term() const;
  GaussianRational coefficient(const Monomial& exponents) const;

  /// Total degree; -1 for the zero polynomial.
  long degree() const;
  long degree(std::string_view name) const;

  /// Re-embeds the polynomial into another variable list. Variables that
  /// occur with a nonzero exponent must be present in `variables`.
  MultiPoly with_variables(std::vector<std::string> variables) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const GaussianRational& c);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const GaussianRational& c) { return lhs *= c; }
  friend MultiPoly operator*(const GaussianRational& c, MultiPoly rhs) { return rhs *= c; }
  MultiPoly operator-() const;

  /// Value equality; a constant over the empty variable list equals the same
  /// constant in any ring.
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  MultiPoly pow(unsigned exponent) const;

  /// Evaluates exactly at the given point.
  GaussianRational evaluate_exact(std::span<const GaussianRational> point) const;

  /// Evaluates at a floating point by exact rational arithmetic on the
  /// binary value of each coordinate, rounding once at the end. This avoids
  /// the cancellation that naive monomial-basis evaluation suffers at high degree.
  std::complex<double> evaluate(std::span<const double> point) const;

  std::size_t max_coeff_bits() const;

 private:
  using VarList = std::shared_ptr<const std::vector<std::string>>;

  MultiPoly(VarList vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

  static VarList make_vars(std::vector<std::string> variables);
  /// Brings lhs and rhs into a common ring (promoting bare constants).
  static void align(MultiPoly& lhs, MultiPoly& rhs);
  bool same_ring(const MultiPoly& other) const;

  friend MultiPoly derivative(const MultiPoly& p, std::string_view name);
  friend MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

  VarList vars_;
  Terms terms_;
};

/// Formal partial derivative with respect to `name`.
MultiPoly derivative(const MultiPoly& p, std::string_view name);

/// Replaces variable k of `p` by images[k]. All images must share one ring
/// (bare constants are promoted); the result lives in that ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace gencheb
