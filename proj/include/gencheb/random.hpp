#pragma once

#include <cstdint>
#include <random>

#include "gencheb/bigrational.hpp"
#include "gencheb/gaussian.hpp"
#include "gencheb/matrix_unit.hpp"

namespace gencheb {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_abs_num and 1 <= q <= max_den.
BigRational random_rational(Rng& rng, long max_abs_num = 9, long max_den = 9);

GaussianRational random_gaussian(Rng& rng, bool real_only = false, long max_abs_num = 9, long max_den = 9);

Mat2 random_mat2(Rng& rng, bool real_only = false);

/// Random matrix with determinant exactly 1.
Mat2 random_unimodular(Rng& rng, bool real_only = false);

}  // namespace gencheb
