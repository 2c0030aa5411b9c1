// filter.hpp — the even spectral plateau filter F (1 on [-a,a], 0 outside
// [-b,b]), the even time cutoff phi_c (1 on [-c,c], supported in [-2c,2c]),
// the tabulated Fourier transform of F, and the moment diagnostics of F_hat.
//
// F has compact support, so F_hat is entire, real, even, and decays
// super-polynomially; it is tabulated once per filter on a uniform r-grid
// by an oversampled FFT and queried by cubic interpolation (or exactly at
// nodes, which is how the time-quadrature path consumes it).
//
// Moments: integral of s^k F_hat(s) ds equals 2*pi*F(0) for k = 0 and 0 for
// k >= 1 (F is flat at the origin).  Verifying the k = 6 moment by direct
// quadrature requires ~14 digits of cancellation against an integrand whose
// absolute mass is ~1e9, which double precision cannot deliver; the moment
// pipeline therefore samples F, runs the FFT and the quadrature sums in
// __float128.  Per-bin absolute error lands near 1e-25, leaving the 1e-6
// acceptance tolerance with orders of magnitude to spare.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <quadmath.h>

#include "wavereg/fft.hpp"
#include "wavereg/manifold.hpp"
#include "wavereg/profile.hpp"

namespace wavereg {

struct FilterSpec {
    double a = 1.0;  // plateau radius, F == 1 on [-a, a]
    double b = 2.0;  // support radius, F == 0 outside [-b, b]
    int tab_log2_samples = 14;  // F-sample resolution backing the transform table

    FilterSpec() = default;
    FilterSpec(double a_, double b_, int tab_log2 = 14)
        : a(a_), b(b_), tab_log2_samples(tab_log2) {
        if (!(0.0 < a && a < b)) throw std::invalid_argument("FilterSpec: need 0 < a < b");
    }

    double operator()(double x) const { return plateau_bump(x, a, b); }
    __float128 eval_q(__float128 x) const { return plateau_bump<__float128>(x, a, b); }
};

struct CutoffSpec {
    double c = 0.5;  // phi_c == 1 on [-c, c], supp phi_c in [-2c, 2c], even

    CutoffSpec() = default;
    explicit CutoffSpec(double c_) : c(c_) {
        if (!(c > 0.0)) throw std::invalid_argument("CutoffSpec: need c > 0");
    }

    double operator()(double s) const { return plateau_bump(s, c, 2.0 * c); }
};

namespace detail {

// 6-point Lagrange interpolation on a uniform table, degrading gracefully
// near the ends.  Error ~ h^6 f^(6), which keeps the tabulated transform
// good to ~1e-10 at the node spacings used here.
inline double interp6(const std::vector<double>& v, double step, double x) {
    if (x <= 0.0) return v.front();
    const double t = x / step;
    std::size_t i = std::size_t(t);
    if (i + 3 >= v.size() || i < 2) {
        if (i + 1 >= v.size()) return v.back();
        return v[i] + (t - double(i)) * (v[i + 1] - v[i]);
    }
    const double u = t - double(i);  // in [0,1), nodes at -2,-1,0,1,2,3
    double out = 0.0;
    static const double denom[6] = {-120.0, 24.0, -12.0, 12.0, -24.0, 120.0};
    for (int j = 0; j < 6; ++j) {
        double num = 1.0;
        for (int l = 0; l < 6; ++l)
            if (l != j) num *= (u - double(l - 2));
        out += v[i + std::size_t(j) - 2] * num / denom[j];
    }
    return out;
}

}  // namespace detail

// Fast interpolated values of F on the transition (a, b); exact 1 / 0 on
// the plateau and outside the support.
class FilterValueTable {
  public:
    FilterValueTable() = default;
    explicit FilterValueTable(const FilterSpec& f, std::size_t nodes = std::size_t(1) << 16)
        : a_(f.a), b_(f.b), step_((f.b - f.a) / double(nodes - 1)), v_(nodes) {
        for (std::size_t i = 0; i < nodes; ++i) v_[i] = f(f.a + double(i) * step_);
    }

    double operator()(double x) const {
        const double y = std::abs(x);
        if (y <= a_) return 1.0;
        if (y >= b_) return 0.0;
        return detail::interp6(v_, step_, y - a_);
    }

  private:
    double a_ = 0.0, b_ = 0.0, step_ = 1.0;
    std::vector<double> v_;
};

// F_hat on the uniform grid r_j = j * dr, built by oversampled FFT.
// F is arranged as an even periodic sequence (x = 0 at bin 0), so the
// transform is real by construction; the measured imaginary defect is
// kept as a diagnostic.
class FilterFourierTable {
  public:
    FilterFourierTable() = default;

    // min_r_max: the table must reach at least this argument (the time
    // quadrature consumes F_hat(s/eps) up to s = 2c, so callers pass
    // 2*c/eps_min).  max_dr: node spacing requirement.
    FilterFourierTable(const FilterSpec& f, double min_r_max, double max_dr) : filter_(f) {
        std::size_t nx = std::size_t(1) << f.tab_log2_samples;
        // grow the sample count until the Nyquist range covers min_r_max
        while (kPi * double(nx) / (2.0 * f.b) < 1.05 * min_r_max) nx <<= 1;
        const double dx = 2.0 * f.b / double(nx);
        std::size_t nfft = nx;
        while (kTwoPi / (double(nfft) * dx) > max_dr) nfft <<= 1;

        std::vector<Cplx<double>> buf(nfft, Cplx<double>{0.0, 0.0});
        for (std::size_t j = 0; j <= nx / 2; ++j) {
            const double val = f(double(j) * dx);
            buf[j].re = val;
            if (j != 0 && j != nfft - j) buf[nfft - j].re = val;
        }
        fft_inplace(buf, -1);

        dr_ = kTwoPi / (double(nfft) * dx);
        val_.resize(nfft / 2 + 1);
        imag_defect_ = 0.0;
        for (std::size_t j = 0; j <= nfft / 2; ++j) {
            val_[j] = dx * buf[j].re;
            imag_defect_ = std::max(imag_defect_, std::abs(dx * buf[j].im));
        }

        abs_integral_half_ = 0.5 * std::abs(val_[0]);
        for (std::size_t j = 1; j < val_.size(); ++j) abs_integral_half_ += std::abs(val_[j]);
        abs_integral_half_ *= dr_;
    }

    double dr() const { return dr_; }
    double r_max() const { return dr_ * double(val_.size() - 1); }
    std::size_t nodes() const { return val_.size(); }
    double node_value(std::size_t j) const { return val_[j]; }
    double at_zero() const { return val_[0]; }
    double imag_defect() const { return imag_defect_; }
    const FilterSpec& filter() const { return filter_; }

    // integral_0^inf |F_hat|  (the propagation-bound constant)
    double abs_integral_half() const { return abs_integral_half_; }

    // F_hat at arbitrary argument (even), cubic between nodes.
    double operator()(double r) const {
        const double y = std::abs(r);
        if (y >= r_max()) return 0.0;
        return detail::interp6(val_, dr_, y);
    }

  private:
    FilterSpec filter_;
    double dr_ = 1.0;
    double imag_defect_ = 0.0;
    double abs_integral_half_ = 0.0;
    std::vector<double> val_;
};

// Moments integral s^k F_hat(s) ds for k = 0..k_max, by alias-exact
// trapezoid quadrature of the FFT-tabulated transform, entirely in
// __float128.  The signed sum over the symmetric grid is evaluated
// literally; parity and flatness cancellation happen in the arithmetic.
inline std::vector<double> filter_moments(const FilterSpec& f, int k_max) {
    if (k_max < 0 || k_max > 8)
        throw std::invalid_argument("filter_moments: k_max must be in 0..8");

    using Q = __float128;
    const std::size_t nx = std::size_t(1) << 13;
    const std::size_t nfft = nx << 1;
    const Q b = f.b;
    const Q dx = (Q(2) * b) / Q(double(nx));

    std::vector<Cplx<Q>> buf(nfft, Cplx<Q>{Q(0), Q(0)});
    for (std::size_t j = 0; j <= nx / 2; ++j) {
        const Q val = f.eval_q(Q(double(j)) * dx);
        buf[j].re = val;
        if (j != 0) buf[nfft - j].re = val;
    }
    fft_inplace(buf, -1);

    const Q ds = Q(2) * detail::pi_of(Q{}) / (Q(double(nfft)) * dx);
    const std::ptrdiff_t half = std::ptrdiff_t(nfft / 2);

    std::vector<double> out;
    out.reserve(std::size_t(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        Q acc = 0;
        for (std::ptrdiff_t j = -half + 1; j <= half; ++j) {
            const Q fj = dx * buf[std::size_t(j < 0 ? j + std::ptrdiff_t(nfft) : j)].re;
            const Q s = ds * Q(double(j));
            Q p = 1;
            for (int i = 0; i < k; ++i) p *= s;
            acc += p * fj;
        }
        out.push_back(double(acc * ds));
    }
    return out;
}

}  // namespace wavereg
