#include "gencheb/series.hpp"

#include <algorithm>

#include "gencheb/errors.hpp"

namespace gencheb {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<MultiPoly> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

bool TruncatedSeries::is_one() const {
  if (coeffs_[0] != MultiPoly(1)) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  const MultiPoly& lead = s[0];
  if (lead.is_zero() || !lead.is_constant()) {
    throw SingularSeriesError("series is not invertible: constant term must be a nonzero scalar");
  }
  const GaussianRational lead_inv = lead.constant_term().inverse();
  std::vector<MultiPoly> out(s.order() + 1);
  out[0] = MultiPoly(lead_inv);
  for (std::size_t n = 1; n <= s.order(); ++n) {
    MultiPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (s[k].is_zero() || out[n - k].is_zero()) continue;
      acc += s[k] * out[n - k];
    }
    out[n] = -acc * lead_inv;
  }
  return TruncatedSeries(s.order(), std::move(out));
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s[0].is_zero()) {
    throw DomainError("series_exp needs a zero constant term");
  }
  // e' = g' e  gives  n e_n = sum_{k=1..n} k g_k e_{n-k}
  std::vector<MultiPoly> out(s.order() + 1);
  out[0] = MultiPoly(1);
  for (std::size_t n = 1; n <= s.order(); ++n) {
    MultiPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (s[k].is_zero() || out[n - k].is_zero()) continue;
      acc += s[k] * out[n - k] * GaussianRational(static_cast<long>(k));
    }
    out[n] = acc * GaussianRational(BigRational(1, static_cast<long>(n)));
  }
  return TruncatedSeries(s.order(), std::move(out));
}

}  // namespace gencheb
