#pragma once

#include <cstddef>
#include <vector>

#include "gencheb/multipoly.hpp"

namespace gencheb {

/// Power-series prefix c_0 + c_1 t + ... + c_N t^N in one formal variable t,
/// with polynomial coefficients. Arithmetic is exact modulo t^(N+1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order);
  /// Missing coefficients are zero; coefficients past `order` are dropped.
  TruncatedSeries(std::size_t order, std::vector<MultiPoly> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const MultiPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  /// Cauchy product truncated at the smaller of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// True when the series equals 1 + O(t^(N+1)).
  bool is_one() const;

 private:
  std::vector<MultiPoly> coeffs_;
};

/// Multiplicative inverse modulo t^(N+1). The constant coefficient must be a
/// nonzero scalar; otherwise throws SingularSeriesError.
TruncatedSeries series_inverse(const TruncatedSeries& s);

/// exp(s) modulo t^(N+1) for a series with zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);

}  // namespace gencheb
