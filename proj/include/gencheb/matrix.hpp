#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>

#include "gencheb/errors.hpp"

namespace gencheb {

/// Dense N×N matrix over a commutative ring R (value-initialized entries are zero).
template <class R, std::size_t N>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  SquareMatrix(std::initializer_list<std::initializer_list<R>> rows) {
    if (rows.size() != N) throw UsageError("matrix literal has the wrong number of rows");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw UsageError("matrix literal has the wrong number of columns");
      std::size_t j = 0;
      for (const auto& v : row) at(i, j++) = v;
      ++i;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m.at(i, i) = R(1);
    return m;
  }

  R& operator()(std::size_t i, std::size_t j) { return at(i, j); }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * N + j]; }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] += rhs.entries_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) entries_[k] -= rhs.entries_[k];
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }

  friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        R sum{};
        for (std::size_t k = 0; k < N; ++k) sum += lhs(i, k) * rhs(k, j);
        out.at(i, j) = std::move(sum);
      }
    }
    return out;
  }

  friend SquareMatrix operator*(const R& c, SquareMatrix m) {
    for (auto& e : m.entries_) e = c * e;
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  R trace() const {
    R sum{};
    for (std::size_t i = 0; i < N; ++i) sum += (*this)(i, i);
    return sum;
  }

  R determinant() const
    requires(N == 2 || N == 3)
  {
    const auto& m = *this;
    if constexpr (N == 2) {
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    } else {
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!(e == R{})) return false;
    }
    return true;
  }

 private:
  R& at(std::size_t i, std::size_t j) { return entries_[i * N + j]; }

  std::array<R, N * N> entries_{};
};

template <class R>
using Matrix2 = SquareMatrix<R, 2>;
template <class R>
using Matrix3 = SquareMatrix<R, 3>;

/// m^n by binary exponentiation; m^0 is the identity.
template <class R, std::size_t N>
SquareMatrix<R, N> matrix_power(const SquareMatrix<R, N>& m, long n) {
  if (n < 0) throw DomainError("negative matrix power");
  auto result = SquareMatrix<R, N>::identity();
  auto base = m;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

template <class R, std::size_t N>
std::ostream& operator<<(std::ostream& os, const SquareMatrix<R, N>& m) {
  os << '[';
  for (std::size_t i = 0; i < N; ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < N; ++j) os << (j == 0 ? "" : ", ") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace gencheb
