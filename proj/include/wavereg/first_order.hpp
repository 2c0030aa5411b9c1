// first_order.hpp — the admissible first-order operator D = -i d/dtheta on
// the circle: symmetric, elliptic, unit propagation speed, spectrum Z with
// eigenfunction exp(i k theta) at eigenvalue k.
//
// Functional calculus acts mode-wise as multiplication by F(eps k) on the
// signed spectrum; e^{isD} is rotation by s.  A filter whose transform is
// supported in (-c, c) moves supports by at most c — the first-order
// analogue of the wave-window support bound — which is checked on kernels
// built from CompactTransformFilter.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "wavereg/distributions.hpp"
#include "wavereg/filter.hpp"
#include "wavereg/manifold.hpp"
#include "wavereg/profile.hpp"

namespace wavereg {

struct FirstOrderOperator {
    // D = -i d/dtheta on the circle
    double propagation_speed = 1.0;  // sup of the principal symbol on unit covectors

    static double eigenvalue(int k) { return double(k); }  // order 1, signed
};

// samples of F_eps(D) w on the circle grid: coefficient-wise F(eps k)
inline GridFunction first_order_apply(const FilterSpec& f, const TestDistribution& w, double eps,
                                      int K, std::size_t grid_n = 0) {
    if (w.manifold.dim != 1)
        throw std::invalid_argument("first_order_apply: circle models only");
    if (!(eps > 0.0) || eps > 1.0)
        throw std::invalid_argument("first_order_apply: eps must lie in (0,1]");
    if (double(K) * eps < f.b)
        throw std::invalid_argument("first_order_apply: band truncates the filter (band error)");

    const std::size_t n = grid_n ? grid_n : next_pow2(std::size_t(2 * K + 1));
    std::vector<Cplx<double>> bins(n, Cplx<double>{0.0, 0.0});
    for (int k = -K; k <= K; ++k) {
        const double mval = f(eps * FirstOrderOperator::eigenvalue(k));
        if (mval == 0.0) continue;
        const auto cv = w.coeff({k, 0, 0});
        const std::size_t bin = std::size_t((k % int(n) + int(n)) % int(n));
        bins[bin].re += mval * cv.real();
        bins[bin].im += mval * cv.imag();
    }
    fft_inplace(bins, +1);

    GridFunction out;
    out.manifold = w.manifold;
    out.manifold.grid = {n, 1, 1};
    out.manifold.kmax = {std::min(K, int((n - 1) / 2)), 0, 0};
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.values[j] = {bins[j].re, bins[j].im};
    out.real_representing = (out.imag_defect() < 1e-12);
    return out;
}

// e^{isD} acts on coefficients as the phase e^{iks}; on functions it is
// u(theta) -> u(theta + s), so the point mass at x0 flows to x0 - s.
// Returns max |coefficient difference| between the propagated mass and
// the point mass there.
inline double translation_flow_residual(const ManifoldModel& m, double x0, double s, int K) {
    auto w0 = make_distribution("dirac", m, {x0, 0, 0});
    auto w1 = make_distribution("dirac", m, {x0 - s, 0, 0});
    double worst = 0.0;
    for (int k = -K; k <= K; ++k) {
        const std::complex<double> phase(std::cos(double(k) * s), std::sin(double(k) * s));
        worst = std::max(worst, std::abs(phase * w0.coeff({k, 0, 0}) - w1.coeff({k, 0, 0})));
    }
    return worst;
}

// Even filter with transform supported in (-c, c):
//   F(lambda) = (1/A) integral_0^c bump(s; c/2, c) cos(s lambda) ds,
// normalized so F(0) = 1.  Not flat at 0 (it is analytic), but exactly
// what the compact-transform support lemma asks for.
class CompactTransformFilter {
  public:
    explicit CompactTransformFilter(double c, std::size_t quad_nodes = 4096)
        : c_(c), ds_(c / double(quad_nodes)), phv_(quad_nodes + 1) {
        if (!(c > 0.0)) throw std::invalid_argument("CompactTransformFilter: need c > 0");
        for (std::size_t j = 0; j < phv_.size(); ++j)
            phv_[j] = plateau_bump(double(j) * ds_, c / 2.0, c);
        norm_ = raw(0.0);
    }

    double transform_support() const { return c_; }

    double operator()(double lambda) const { return raw(lambda) / norm_; }

  private:
    double raw(double lambda) const {
        double acc = 0.5 * phv_[0];
        for (std::size_t j = 1; j + 1 < phv_.size(); ++j)
            acc += phv_[j] * std::cos(double(j) * ds_ * lambda);
        return acc * ds_;
    }

    double c_;
    double ds_;
    std::vector<double> phv_;
    double norm_ = 1.0;
};

// kernel of F_eps(D) at x0 = 0 for a compact-transform filter, on a fixed
// grid; its support radius is bounded by eps * c (propagation speed 1)
inline GridFunction compact_filter_kernel(const ManifoldModel& m,
                                          const CompactTransformFilter& f, double eps,
                                          std::size_t grid_n) {
    // modes beyond where F has decayed below 1e-16 contribute nothing
    const double lam_max = 4096.0 / eps;
    int K = 16;
    while (std::abs(f(eps * double(K))) > 1e-16 && double(K) < lam_max) K *= 2;

    std::vector<Cplx<double>> bins(grid_n, Cplx<double>{0.0, 0.0});
    for (int k = -K; k <= K; ++k) {
        const double mval = f(eps * double(k)) / kTwoPi;
        const std::size_t bin = std::size_t((k % int(grid_n) + int(grid_n)) % int(grid_n));
        bins[bin].re += mval;
    }
    fft_inplace(bins, +1);

    GridFunction out;
    out.manifold = m;
    out.manifold.grid = {grid_n, 1, 1};
    out.values.resize(grid_n);
    for (std::size_t j = 0; j < grid_n; ++j) out.values[j] = {bins[j].re, bins[j].im};
    out.real_representing = true;
    return out;
}

}  // namespace wavereg
