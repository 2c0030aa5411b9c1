// profile.hpp — the smooth transition profile used everywhere a C-infinity
// cutoff shape is needed: spectral plateau filters, time cutoffs, spatial
// probe windows, band-limiting envelopes.
//
//   glue(t) = g(t) / (g(t) + g(1-t)),   g(t) = exp(-1/t) for t > 0
//
// glue is 0 for t <= 0, 1 for t >= 1, strictly monotone in between, and
// satisfies glue(t) + glue(1-t) = 1 exactly.  plateau_bump(x; a, b) is the
// even bump that is 1 on [-a, a], 0 outside [-b, b], gluing in between.

#pragma once

#include <cmath>
#include <stdexcept>

#include <quadmath.h>

namespace wavereg {

namespace detail {
inline double exp_of(double x) { return std::exp(x); }
inline __float128 exp_of(__float128 x) { return expq(x); }
}  // namespace detail

template <class T>
T smooth_glue(T t) {
    if (t <= T(0)) return T(0);
    if (t >= T(1)) return T(1);
    const T g = detail::exp_of(T(-1) / t);
    const T h = detail::exp_of(T(-1) / (T(1) - t));
    return g / (g + h);
}

// Even plateau bump: 1 on [-a,a], 0 outside [-b,b], smooth glue in between.
template <class T>
T plateau_bump(T x, T a, T b) {
    if (!(a > T(0)) || !(b > a))
        throw std::invalid_argument("plateau_bump: need 0 < a < b");
    const T y = x < T(0) ? -x : x;
    if (y <= a) return T(1);
    if (y >= b) return T(0);
    return smooth_glue((b - y) / (b - a));
}

}  // namespace wavereg
