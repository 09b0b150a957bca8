#pragma once

#include <type_traits>

#include "gencheb/bigrational.hpp"
#include "gencheb/gaussian.hpp"
#include "gencheb/multipoly.hpp"

namespace gencheb {

/// Coefficient rings the generic algebra is instantiated over.
template <class R>
concept ExactRing = std::is_same_v<R, BigRational> || std::is_same_v<R, GaussianRational> ||
                    std::is_same_v<R, MultiPoly>;

/// Embeds a rational constant into R.
template <ExactRing R>
R from_rational(const BigRational& q) {
  if constexpr (std::is_same_v<R, BigRational>) {
    return q;
  } else if constexpr (std::is_same_v<R, GaussianRational>) {
    return GaussianRational(q);
  } else {
    return MultiPoly(GaussianRational(q));
  }
}

template <ExactRing R>
R from_int(long v) {
  return from_rational<R>(BigRational(v));
}

}  // namespace gencheb
