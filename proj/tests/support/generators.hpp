#pragma once

// Hand-rolled generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "gencheb/multipoly.hpp"
#include "gencheb/random.hpp"
#include "gencheb/series.hpp"

namespace gencheb::testing {

inline const std::vector<std::string>& prop_vars() {
  static const std::vector<std::string> vars{"u", "v", "s"};
  return vars;
}

/// Up to `max_terms` terms, exponents below `max_exp` per variable.
inline MultiPoly random_poly(Rng& rng, const std::vector<std::string>& vars, int max_terms = 5,
                             unsigned max_exp = 3, bool complex_coeffs = true) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<unsigned> expo(0, max_exp);
  std::bernoulli_distribution imag(complex_coeffs ? 0.3 : 0.0);
  MultiPoly p(vars);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    Monomial m(vars.size());
    for (auto& e : m) e = expo(rng);
    p += MultiPoly::monomial(vars, m, random_gaussian(rng, !imag(rng)));
  }
  return p;
}

/// Random series whose constant term is a nonzero rational scalar.
inline TruncatedSeries random_invertible_series(Rng& rng, std::size_t order) {
  std::vector<MultiPoly> coeffs(order + 1);
  BigRational c0;
  do {
    c0 = random_rational(rng);
  } while (c0.is_zero());
  coeffs[0] = MultiPoly::constant(prop_vars(), c0);
  for (std::size_t k = 1; k <= order; ++k) coeffs[k] = random_poly(rng, prop_vars(), 3, 2);
  return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace gencheb::testing
