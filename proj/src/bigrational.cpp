#include "gencheb/bigrational.hpp"

#include <cctype>
#include <cmath>

#include "gencheb/errors.hpp"

namespace gencheb {

BigRational::BigRational(long numerator, long denominator) {
  if (denominator == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_.canonicalize();
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw DomainError("cannot convert a non-finite double to a rational");
  }
  return BigRational(mpq_class(value));
}

BigRational BigRational::from_string(std::string_view text) {
  const auto valid_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!valid_digits(num) || !valid_digits(den)) {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (negative) n = -n;
  return BigRational(mpq_class(n, d));
}

BigRational BigRational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(mpq_class(f));
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) {
    throw DomainError("division by zero");
  }
  return BigRational(mpq_class(1 / value_));
}

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRational(mpq_class(n, d));
}

std::size_t BigRational::bits() const {
  const std::size_t nb = is_zero() ? 0 : mpz_sizeinbase(value_.get_num_mpz_t(), 2);
  const std::size_t db = mpz_sizeinbase(value_.get_den_mpz_t(), 2);
  return nb > db ? nb : db;
}

bool BigRational::is_canonical() const {
  if (value_.get_den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace gencheb
