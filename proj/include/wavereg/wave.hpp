// wave.hpp — leapfrog integration of the wave equation u_tt = -Delta_h u
// on the circle grid, and the time-quadrature application of the
// regularization operator through it.
//
// This path exists to verify finite propagation speed in physical space;
// the spectral path cannot falsify it independently.  The scheme is the
// standard second-order stencil; with time step <= spatial step the
// numerical group velocity stays below 1 for every mode, so energy cannot
// systematically lead the light cone.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wavereg/regularizer.hpp"

namespace wavereg {

struct WaveParams {
    std::size_t grid_n = 512;
    double cfl = 0.5;        // dt = cfl * dx, must stay <= 1
    int pretrunc_divisor = 4;  // K_wave = grid_n / divisor
};

// second-order leapfrog on the periodic 1-d grid
class LeapfrogWave {
  public:
    LeapfrogWave(std::vector<double> u0, double dx, double dt)
        : dx_(dx), dt_(dt), cur_(std::move(u0)), prev_(cur_), time_(0.0) {
        if (!(dt > 0.0) || dt > dx)
            throw std::domain_error("leapfrog: need 0 < dt <= dx (stability)");
        // first step from rest: u1 = u0 + dt^2/2 * u_xx
        const std::size_t n = cur_.size();
        std::vector<double> next(n);
        const double r = dt_ * dt_ / (dx_ * dx_);
        for (std::size_t j = 0; j < n; ++j) {
            const double lap = cur_[(j + 1) % n] - 2.0 * cur_[j] + cur_[(j + n - 1) % n];
            next[j] = cur_[j] + 0.5 * r * lap;
        }
        prev_ = cur_;
        cur_ = std::move(next);
        time_ = dt_;
    }

    void step() {
        const std::size_t n = cur_.size();
        const double r = dt_ * dt_ / (dx_ * dx_);
        std::vector<double> next(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double lap = cur_[(j + 1) % n] - 2.0 * cur_[j] + cur_[(j + n - 1) % n];
            next[j] = 2.0 * cur_[j] - prev_[j] + r * lap;
        }
        prev_ = std::move(cur_);
        cur_ = std::move(next);
        time_ += dt_;
    }

    double time() const { return time_; }
    double dt() const { return dt_; }
    const std::vector<double>& state() const { return cur_; }
    const std::vector<double>& previous() const { return prev_; }

  private:
    double dx_, dt_;
    std::vector<double> cur_, prev_;
    double time_;
};

// samples of the distribution band-limited to the wave grid with a smooth
// spectral envelope (1 up to K_wave/2, gone at K_wave)
inline std::vector<double> wave_initial_samples(const TestDistribution& w, std::size_t grid_n,
                                                int k_wave) {
    if (w.manifold.dim != 1)
        throw std::invalid_argument("wave path: circle models only");
    ManifoldModel m = w.manifold;
    m.kmax = {k_wave, 0, 0};
    m.grid = {grid_n, 1, 1};
    m.validate();
    SpectralCoefficients c(m);
    for (int k = -k_wave; k <= k_wave; ++k)
        c.at({k, 0, 0}) =
            w.coeff({k, 0, 0}) *
            plateau_bump(double(std::abs(k)), double(k_wave) / 2.0, double(k_wave) + 0.5);
    auto u = inverse_transform(c);
    std::vector<double> out(u.values.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = u.values[j].real();
    return out;
}

// exactly compactly supported smooth bump samples (plateau r_inner, gone
// at r_outer), for support tests where the initial support must be known
// bit-exactly
inline std::vector<double> compact_bump_samples(const ManifoldModel& m, double center,
                                                double r_inner, double r_outer,
                                                std::size_t grid_n) {
    if (m.dim != 1) throw std::invalid_argument("compact_bump_samples: circle models only");
    std::vector<double> out(grid_n);
    const double dx = m.lengths[0] / double(grid_n);
    for (std::size_t j = 0; j < grid_n; ++j) {
        double d = std::abs(double(j) * dx - center);
        d = std::min(d, m.lengths[0] - d);
        out[j] = d >= r_outer ? 0.0 : plateau_bump(d, r_inner, r_outer);
    }
    return out;
}

// T_eps w through the wave equation: leapfrog-propagate the band-limited
// initial data and accumulate the even-folded time quadrature
//   (1/pi) sum_j dt w_j phi_c(s_j) F_hat(s_j/eps)/eps u(s_j),  s in [0, 2c].
inline GridFunction apply_wave(const RegularizationProcess& p, const TestDistribution& w,
                               double eps, const WaveParams& wp = {}) {
    if (p.kind != ProcessKind::WaveWindow)
        throw std::logic_error("apply_wave: wave-window process required");
    if (p.manifold.dim != 1)
        throw std::invalid_argument("apply_wave: circle models only");
    if (!(wp.cfl > 0.0) || wp.cfl > 1.0)
        throw std::domain_error("apply_wave: CFL violation (need dt <= dx)");
    p.check_eps(eps);

    const std::size_t n = wp.grid_n;
    const double dx = p.manifold.lengths[0] / double(n);
    const double smax = 2.0 * p.cutoff.c;
    // resolve both the stencil and the oscillation of F_hat(s/eps)
    const double dt_cap = std::min(wp.cfl * dx, kPi * eps / (10.0 * p.filter.b));
    const std::size_t steps = std::size_t(std::ceil(smax / dt_cap));
    const double dt = smax / double(steps);

    const int k_wave = int(n) / wp.pretrunc_divisor;
    LeapfrogWave solver(wave_initial_samples(w, n, k_wave), dx, dt);

    const auto& fhat = *p.fhat;
    auto weight = [&](double s) { return p.cutoff(s) * fhat(s / eps) / eps; };

    std::vector<double> acc(n);
    // trapezoid: half weight at s = 0 (the fold point); phi_c kills s = smax
    {
        // state at t = 0 is the initial data; solver already stepped once
        auto u0 = wave_initial_samples(w, n, k_wave);
        const double w0 = 0.5 * weight(0.0);
        for (std::size_t j = 0; j < n; ++j) acc[j] = w0 * u0[j];
    }
    for (std::size_t i = 1; i <= steps; ++i) {
        if (i > 1) solver.step();
        const double wi = weight(solver.time());
        if (wi != 0.0)
            for (std::size_t j = 0; j < n; ++j) acc[j] += wi * solver.state()[j];
    }

    GridFunction out;
    out.manifold = p.manifold;
    out.manifold.grid = {n, 1, 1};
    out.manifold.kmax = {k_wave, 0, 0};
    out.values.resize(n);
    const double scale = dt / kPi;
    for (std::size_t j = 0; j < n; ++j) out.values[j] = scale * acc[j];
    out.real_representing = true;
    return out;
}

// squared-mass fraction of a real snapshot outside distance `radius` of x0
inline double snapshot_mass_outside(const ManifoldModel& m, const std::vector<double>& u,
                                    double x0, double radius) {
    double outside = 0.0, total = 0.0;
    const double dx = m.lengths[0] / double(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        double d = std::abs(double(j) * dx - x0);
        d = std::min(d, m.lengths[0] - d);
        const double a2 = u[j] * u[j];
        total += a2;
        if (d > radius) outside += a2;
    }
    return total == 0.0 ? 0.0 : outside / total;
}

}  // namespace wavereg
