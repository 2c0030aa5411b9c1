// fft.hpp — radix-2 complex FFT, templated on the scalar type.
//
// Power-of-two sizes only; grids in this library are sized that way by
// construction.  The template parameter lets the same kernel run in
// double (production transforms) and __float128 (the extended-precision
// filter-moment pipeline, where per-bin absolute errors below 1e-30 are
// required).  Twiddles are evaluated per index from libm/libquadmath
// rather than by repeated multiplication, so per-bin error stays at a
// few ulp independent of transform length.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <quadmath.h>

namespace wavereg {

// Minimal complex pair; std::complex is not specified for __float128.
template <class T>
struct Cplx {
    T re{};
    T im{};

    friend Cplx operator+(Cplx a, Cplx b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(Cplx a, Cplx b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(Cplx a, Cplx b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

namespace detail {

inline void sincos_of(double x, double& s, double& c) {
    s = std::sin(x);
    c = std::cos(x);
}
inline void sincos_of(__float128 x, __float128& s, __float128& c) {
    sincosq(x, &s, &c);
}

inline double pi_of(double) { return 3.14159265358979323846264338327950288; }
inline __float128 pi_of(__float128) {
    static const __float128 pi_q = acosq(__float128(-1));
    return pi_q;
}

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace detail

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place decimation-in-time FFT.  sign = -1: forward (e^{-2πijk/n}),
// sign = +1: inverse kernel.  Unnormalized; callers scale.
template <class T>
void fft_inplace(std::vector<Cplx<T>>& a, int sign) {
    const std::size_t n = a.size();
    if (!detail::is_pow2(n))
        throw std::invalid_argument("fft: size must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    // per-index twiddles for the largest stage, reused with stride below
    const T pi = detail::pi_of(T{});
    std::vector<Cplx<T>> tw(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        T s, c;
        detail::sincos_of(T(sign) * T(2) * pi * T(double(j)) / T(double(n)), s, c);
        tw[j] = {c, s};
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                Cplx<T> w = tw[j * stride];
                Cplx<T> u = a[i + j];
                Cplx<T> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

// Multi-dimensional FFT on a row-major array with extents dims[0..m-1]
// (last index fastest).  Applies the 1-d kernel along every axis.
template <class T>
void fft_nd_inplace(std::vector<Cplx<T>>& a, const std::vector<std::size_t>& dims, int sign) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (a.size() != total)
        throw std::invalid_argument("fft_nd: size mismatch with dims");

    std::size_t stride = 1;  // stride of the current axis, walking from last to first
    for (std::size_t ax = dims.size(); ax-- > 0;) {
        const std::size_t n = dims[ax];
        const std::size_t block = n * stride;
        std::vector<Cplx<T>> line(n);
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (std::size_t i = 0; i < n; ++i) line[i] = a[base + off + i * stride];
                fft_inplace(line, sign);
                for (std::size_t i = 0; i < n; ++i) a[base + off + i * stride] = line[i];
            }
        }
        stride *= n;
    }
}

}  // namespace wavereg
