#include <gtest/gtest.h>

#include <cmath>

#include "gencheb/chebyshev.hpp"
#include "gencheb/gcn.hpp"
#include "gencheb/polytext.hpp"
#include "gencheb/random.hpp"

using namespace gencheb;

namespace {

using Q = BigRational;

const std::vector<std::string> kX{"x"};
MultiPoly px(const char* text) { return parse_poly(text, kX); }

constexpr std::array<PowerMethod, 3> kMethods{PowerMethod::recurrence, PowerMethod::matrix, PowerMethod::binet};

}  // namespace

TEST(GcnMul, Examples) {
  const GcnUnit<Q> imaginary{-1, 0};
  const auto h = gcn_h(imaginary);
  const auto h2 = gcn_mul(h, h);
  EXPECT_EQ(h2.re, Q(-1));
  EXPECT_EQ(h2.im, Q(0));

  const GcnUnit<Q> golden{1, 1};
  const auto g2 = gcn_mul(gcn_h(golden), gcn_h(golden));
  EXPECT_EQ(g2.re, Q(1));
  EXPECT_EQ(g2.im, Q(1));

  const GcnUnit<MultiPoly> cheb = cheb_unit();
  const auto c2 = gcn_mul(gcn_h(cheb), gcn_h(cheb));
  EXPECT_EQ(c2.re, MultiPoly(-1));
  EXPECT_EQ(c2.im, px("2*x"));
}

TEST(GcnMul, MismatchedUnits) {
  const GcnElement<Q> x{{-1, 0}, 1, 1};
  const GcnElement<Q> y{{1, 0}, 1, 1};
  EXPECT_THROW((void)gcn_mul(x, y), DomainError);
}

TEST(GcnPower, PowersOfI) {
  const GcnUnit<Q> imaginary{-1, 0};
  const std::array<std::pair<long, long>, 5> expected{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}}};
  for (PowerMethod method : kMethods) {
    for (long n = 0; n <= 4; ++n) {
      const auto c = gcn_power_coeffs(imaginary, n, method);
      EXPECT_EQ(c.a_n, Q(expected[static_cast<std::size_t>(n)].first));
      EXPECT_EQ(c.b_n, Q(expected[static_cast<std::size_t>(n)].second));
    }
  }
}

TEST(GcnPower, FibonacciUnit) {
  // Oracle: plain integer Fibonacci iteration.
  std::vector<long> fib{0, 1};
  for (int k = 0; k < 40; ++k) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  const GcnUnit<Q> golden{1, 1};
  for (PowerMethod method : kMethods) {
    for (long n = 1; n <= 40; ++n) {
      const auto c = gcn_power_coeffs(golden, n, method);
      EXPECT_EQ(c.b_n, Q(fib[static_cast<std::size_t>(n)]));
      EXPECT_EQ(c.a_n, Q(fib[static_cast<std::size_t>(n - 1)]));
    }
  }
}

TEST(GcnPower, SymbolicChebyshevUnitAgainstRepeatedMultiplication) {
  const GcnUnit<MultiPoly> cheb = cheb_unit();
  GcnElement<MultiPoly> power{cheb, MultiPoly(1), MultiPoly(0)};
  for (long n = 0; n <= 12; ++n) {
    for (PowerMethod method : kMethods) {
      const auto c = gcn_power_coeffs(cheb, n, method);
      EXPECT_EQ(c.a_n, power.re) << "n=" << n;
      EXPECT_EQ(c.b_n, power.im) << "n=" << n;
    }
    power = gcn_mul(power, gcn_h(cheb));
  }
  const auto c3 = gcn_power_coeffs(cheb, 3, PowerMethod::binet);
  EXPECT_EQ(c3.a_n, px("-2*x"));
  EXPECT_EQ(c3.b_n, px("4*x^2 - 1"));
}

TEST(GcnPower, NegativePowerRejected) {
  EXPECT_THROW((void)gcn_power_coeffs(GcnUnit<Q>{1, 1}, -1, PowerMethod::recurrence), DomainError);
  EXPECT_THROW((void)companion_power(GcnUnit<Q>{1, 1}, -2), DomainError);
}

TEST(GcnPower, DegenerateBinetUsesLimit) {
  const GcnUnit<Q> unit{-1, 2};  // h+ = h- = 1
  ASSERT_TRUE(unit.degenerate());
  for (long n = 0; n <= 20; ++n) {
    const auto rec = gcn_power_coeffs(unit, n, PowerMethod::recurrence);
    EXPECT_EQ(gcn_power_coeffs(unit, n, PowerMethod::binet), rec);
    EXPECT_EQ(rec.b_n, Q(n));
  }
  const GcnUnit<Q> shifted{Q(-9, 4), 3};
  ASSERT_TRUE(shifted.degenerate());
  for (long n = 0; n <= 20; ++n) {
    EXPECT_EQ(gcn_power_coeffs(shifted, n, PowerMethod::binet), gcn_power_coeffs(shifted, n, PowerMethod::recurrence));
  }
}

TEST(CompanionPower, Examples) {
  EXPECT_EQ(companion_power(GcnUnit<Q>{-1, 0}, 4), Matrix2<Q>::identity());
  // Column action advances (a_n, b_n).
  const GcnUnit<Q> golden{1, 1};
  const auto q = companion(golden);
  for (long n = 0; n < 20; ++n) {
    const auto c = gcn_power_coeffs(golden, n, PowerMethod::recurrence);
    const auto next = gcn_power_coeffs(golden, n + 1, PowerMethod::recurrence);
    EXPECT_EQ(q(0, 0) * c.a_n + q(0, 1) * c.b_n, next.a_n);
    EXPECT_EQ(q(1, 0) * c.a_n + q(1, 1) * c.b_n, next.b_n);
  }
}

TEST(CompanionPower, DefiningQuadraticAndDeterminant) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const GcnUnit<Q> unit{random_rational(rng), random_rational(rng)};
    const auto q = companion(unit);
    EXPECT_EQ(q * q, unit.a * Matrix2<Q>::identity() + unit.b * q);
    EXPECT_EQ(q.determinant(), -unit.a);
    for (long n = 0; n <= 12; ++n) {
      EXPECT_EQ(companion_power(unit, n).determinant(), (-unit.a).pow(static_cast<unsigned>(n)));
    }
  }
}

TEST(ConjugateRoots, Invariants) {
  Rng rng(17);
  for (int k = 0; k < 50; ++k) {
    const GcnUnit<Q> unit{random_rational(rng), random_rational(rng)};
    const auto r = conjugate_roots(unit);
    const Surd<Q> sum = r.h_plus + r.h_minus;
    const Surd<Q> prod = r.h_plus * r.h_minus;
    const Surd<Q> diff = r.h_plus - r.h_minus;
    EXPECT_TRUE(sum.is_rational());
    EXPECT_EQ(sum.rational, unit.b);
    EXPECT_TRUE(prod.is_rational());
    EXPECT_EQ(prod.rational, -unit.a);
    EXPECT_EQ(diff, (Surd<Q>{0, 1, unit.discriminant()}));
  }
}

TEST(ConjugateRoots, Examples) {
  const auto i_roots = conjugate_roots_numeric(-1.0, 0.0);
  EXPECT_NEAR(i_roots.first.imag(), 1.0, 1e-15);
  EXPECT_NEAR(i_roots.second.imag(), -1.0, 1e-15);

  const auto golden = conjugate_roots(GcnUnit<Q>{1, 1});
  EXPECT_EQ(golden.h_plus.rational, Q(1, 2));
  EXPECT_EQ(golden.h_plus.surd, Q(1, 2));
  EXPECT_EQ(golden.h_plus.radicand, Q(5));
  EXPECT_FALSE(golden.degenerate);

  const auto flat = conjugate_roots(GcnUnit<Q>{-1, 2});
  EXPECT_TRUE(flat.degenerate);
  EXPECT_EQ(flat.h_plus.rational, Q(1));
  EXPECT_EQ(flat.h_minus.rational, Q(1));
}

TEST(Binet, NumeratorIdentityInSurdArithmetic) {
  Rng rng(23);
  for (int k = 0; k < 20; ++k) {
    const GcnUnit<Q> unit{random_rational(rng), random_rational(rng)};
    if (unit.degenerate()) continue;
    const auto r = conjugate_roots(unit);
    for (long n = 0; n <= 20; ++n) {
      const Q b_n = gcn_power_coeffs(unit, n, PowerMethod::recurrence).b_n;
      const Surd<Q> lhs = Surd<Q>{b_n, 0, unit.discriminant()} * (r.h_plus - r.h_minus);
      EXPECT_EQ(lhs, r.h_plus.pow(n) - r.h_minus.pow(n));
    }
  }
}

TEST(Binet, FloatingApproximation) {
  const auto c = binet_power_coeffs_floating(1.0, 1.0, 30);
  EXPECT_TRUE(c.approximate);
  EXPECT_NEAR(c.b_n, 832040.0, 1e-6);
  EXPECT_NEAR(c.a_n, 514229.0, 1e-6);
  const auto deg = binet_power_coeffs_floating(-1.0, 2.0, 7);
  EXPECT_DOUBLE_EQ(deg.b_n, 7.0);
  EXPECT_DOUBLE_EQ(deg.a_n, -6.0);
}
