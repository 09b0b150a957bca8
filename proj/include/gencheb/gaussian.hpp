#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>

#include "gencheb/bigrational.hpp"

namespace gencheb {

/// Exact complex number re + im*i with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  GaussianRational(I re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;
  GaussianRational pow(unsigned exponent) const;

  std::size_t bits() const { return re_.bits() > im_.bits() ? re_.bits() : im_.bits(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  /// "3/2", "-i", "(1/2 + 3*i)" -- the coefficient syntax used by polynomial text.
  std::string to_string() const;

 private:
  BigRational re_;
  BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace gencheb
