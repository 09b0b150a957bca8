#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gencheb {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class; every constructor and arithmetic
/// result is canonicalized so that two equal values compare bitwise equal.
class BigRational {
 public:
  BigRational() = default;

  template <std::integral I>
  BigRational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  BigRational(long numerator, long denominator);

  explicit BigRational(mpq_class value);

  /// Exact binary value of a finite double.
  static BigRational from_double(double value);

  /// Parses "-12", "3/4" (no whitespace, denominator must be positive).
  static BigRational from_string(std::string_view text);

  static BigRational factorial(unsigned n);

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational abs() const;
  BigRational inverse() const;
  BigRational pow(unsigned exponent) const;

  /// Largest bit length among numerator and denominator.
  std::size_t bits() const;

  /// True when gcd(|num|, den) == 1 and den > 0.
  bool is_canonical() const;

  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace gencheb
