#include "gencheb/random.hpp"

namespace gencheb {

BigRational random_rational(Rng& rng, long max_abs_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  const long p = num(rng);
  const long q = den(rng);
  return BigRational(p, q);
}

GaussianRational random_gaussian(Rng& rng, bool real_only, long max_abs_num, long max_den) {
  BigRational re = random_rational(rng, max_abs_num, max_den);
  if (real_only) return GaussianRational(std::move(re));
  BigRational im = random_rational(rng, max_abs_num, max_den);
  return {std::move(re), std::move(im)};
}

Mat2 random_mat2(Rng& rng, bool real_only) {
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = random_gaussian(rng, real_only);
  }
  return m;
}

Mat2 random_unimodular(Rng& rng, bool real_only) {
  GaussianRational m11;
  do {
    m11 = random_gaussian(rng, real_only);
  } while (m11.is_zero());
  const GaussianRational m12 = random_gaussian(rng, real_only);
  const GaussianRational m21 = random_gaussian(rng, real_only);
  const GaussianRational m22 = (GaussianRational(1) + m12 * m21) / m11;
  return Mat2{{m11, m12}, {m21, m22}};
}

}  // namespace gencheb
