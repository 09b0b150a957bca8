#include "gencheb/gaussian.hpp"

#include "gencheb/errors.hpp"

namespace gencheb {

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  BigRational re = re_ * rhs.re_ - im_ * rhs.im_;
  im_ = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) {
    throw DomainError("division by zero");
  }
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) {
    throw DomainError("division by zero");
  }
  const BigRational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == BigRational(1)) {
    imag = "i";
  } else if (im_ == BigRational(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return imag;
  if (im_.sign() < 0) {
    const std::string mag = im_.abs().is_one() ? "i" : im_.abs().to_string() + "*i";
    return "(" + re_.to_string() + " - " + mag + ")";
  }
  return "(" + re_.to_string() + " + " + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace gencheb
