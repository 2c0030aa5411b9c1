// manifold.hpp — flat model manifolds (unit circle, flat tori) with exact
// Laplacian spectra, uniform tensor-product grids, forward/inverse spectral
// transforms, Sobolev norms, geodesic distance and the eigenvalue counting
// function.
//
// Conventions:
//   basis          e_k(x) = exp(i <2*pi*k/L, x>),   ||e_k||_L2^2 = vol(M)
//   eigenvalue     lambda_k = sum_i (2*pi*k_i/L_i)^2   (positive Laplacian)
//   coefficients   u = sum_k  u_hat_k e_k
//   forward        u_hat_k = (1/vol) * integral u(x) conj(e_k(x)) dx,
//                  evaluated trapezoid-exactly by FFT on the uniform grid.
//
// Grids are power-of-two per dimension with n_i >= 2*K_i + 1 so every
// represented mode is alias-free.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavereg/fft.hpp"

namespace wavereg {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class ManifoldKind { Circle, Torus };

using Point = std::array<double, 3>;  // first `dim` entries are used

struct ManifoldModel {
    ManifoldKind kind = ManifoldKind::Circle;
    int dim = 1;
    std::array<double, 3> lengths{kTwoPi, 0.0, 0.0};
    std::array<int, 3> kmax{0, 0, 0};        // max represented mode per dim
    std::array<std::size_t, 3> grid{1, 1, 1};  // grid points per dim (power of two)

    static ManifoldModel circle(int max_mode, std::size_t grid_n = 0) {
        ManifoldModel m;
        m.kind = ManifoldKind::Circle;
        m.dim = 1;
        m.lengths = {kTwoPi, 0.0, 0.0};
        m.kmax = {max_mode, 0, 0};
        m.grid = {grid_n ? grid_n : next_pow2(std::size_t(2 * max_mode + 1)), 1, 1};
        m.validate();
        return m;
    }

    static ManifoldModel torus(std::vector<double> side_lengths, std::vector<int> max_modes,
                               std::vector<std::size_t> grid_n = {}) {
        ManifoldModel m;
        m.kind = ManifoldKind::Torus;
        m.dim = int(side_lengths.size());
        if (m.dim < 1 || m.dim > 3)
            throw std::invalid_argument("manifold: torus dimension must be 1..3");
        if (max_modes.size() != side_lengths.size())
            throw std::invalid_argument("manifold: lengths/modes size mismatch");
        for (int i = 0; i < m.dim; ++i) {
            m.lengths[i] = side_lengths[i];
            m.kmax[i] = max_modes[i];
            m.grid[i] = grid_n.empty() ? next_pow2(std::size_t(2 * max_modes[i] + 1))
                                       : grid_n[std::size_t(i)];
        }
        m.validate();
        return m;
    }

    void validate() const {
        for (int i = 0; i < dim; ++i) {
            if (!(lengths[i] > 0.0))
                throw std::invalid_argument("manifold: side lengths must be positive");
            if (kmax[i] < 0) throw std::invalid_argument("manifold: kmax must be >= 0");
            if (grid[i] < std::size_t(2 * kmax[i] + 1))
                throw std::invalid_argument(
                    "manifold: grid must satisfy n >= 2*kmax+1 (alias-free band)");
        }
        if (kind == ManifoldKind::Circle &&
            (dim != 1 || std::abs(lengths[0] - kTwoPi) > 1e-14))
            throw std::invalid_argument("manifold: circle is fixed at circumference 2*pi");
    }

    double volume() const {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) v *= lengths[i];
        return v;
    }

    std::size_t grid_size() const {
        std::size_t n = 1;
        for (int i = 0; i < dim; ++i) n *= grid[i];
        return n;
    }

    std::int64_t mode_count() const {
        std::int64_t n = 1;
        for (int i = 0; i < dim; ++i) n *= 2 * std::int64_t(kmax[i]) + 1;
        return n;
    }

    // angular frequency of mode index k_i along dim i
    double freq(int i, int k) const { return kTwoPi * double(k) / lengths[i]; }

    double grid_step(int i) const { return lengths[i] / double(grid[i]); }

    Point grid_point(std::size_t flat) const {
        Point x{0.0, 0.0, 0.0};
        for (int i = dim - 1; i >= 0; --i) {
            x[std::size_t(i)] = double(flat % grid[i]) * grid_step(i);
            flat /= grid[i];
        }
        return x;
    }

    // same underlying manifold; grid and band are discretization choices
    bool same_geometry(const ManifoldModel& o) const {
        if (kind != o.kind || dim != o.dim) return false;
        for (int i = 0; i < dim; ++i)
            if (lengths[i] != o.lengths[i]) return false;
        return true;
    }
};

// lambda_k = sum_i (2*pi*k_i/L_i)^2
inline double eigenvalue(const ManifoldModel& m, const std::array<int, 3>& k) {
    double s = 0.0;
    for (int i = 0; i < m.dim; ++i) {
        const double w = m.freq(i, k[std::size_t(i)]);
        s += w * w;
    }
    return s;
}

// Flat wrap-around distance, per-dim min(|d|, L-|d|), combined in l2.
inline double geodesic_distance(const ManifoldModel& m, const Point& x, const Point& y) {
    double s = 0.0;
    for (int i = 0; i < m.dim; ++i) {
        double d = std::abs(x[std::size_t(i)] - y[std::size_t(i)]);
        d = std::fmod(d, m.lengths[i]);
        d = std::min(d, m.lengths[i] - d);
        s += d * d;
    }
    return std::sqrt(s);
}

// Exact count of lattice modes with eigenvalue <= lambda, brute force.
inline std::int64_t counting_function(const ManifoldModel& m, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("counting_function: lambda must be >= 0");
    std::array<std::int64_t, 3> reach{0, 0, 0};
    for (int i = 0; i < m.dim; ++i)
        reach[std::size_t(i)] = std::int64_t(std::floor(std::sqrt(lambda) * m.lengths[i] / kTwoPi)) + 1;

    std::int64_t count = 0;
    std::array<int, 3> k{0, 0, 0};
    // nested loop over the (up to 3-d) lattice box
    for (std::int64_t k0 = -reach[0]; k0 <= reach[0]; ++k0) {
        k[0] = int(k0);
        if (m.dim == 1) {
            if (eigenvalue(m, k) <= lambda) ++count;
            continue;
        }
        for (std::int64_t k1 = -reach[1]; k1 <= reach[1]; ++k1) {
            k[1] = int(k1);
            if (m.dim == 2) {
                if (eigenvalue(m, k) <= lambda) ++count;
                continue;
            }
            for (std::int64_t k2 = -reach[2]; k2 <= reach[2]; ++k2) {
                k[2] = int(k2);
                if (eigenvalue(m, k) <= lambda) ++count;
            }
        }
    }
    return count;
}

struct GridFunction {
    ManifoldModel manifold;
    std::vector<std::complex<double>> values;  // row-major over the grid
    bool real_representing = false;

    GridFunction() = default;
    explicit GridFunction(const ManifoldModel& m, bool real_rep = false)
        : manifold(m), values(m.grid_size()), real_representing(real_rep) {}

    double max_abs() const {
        double mx = 0.0;
        for (const auto& v : values) mx = std::max(mx, std::abs(v));
        return mx;
    }

    // largest |Im| relative to the max magnitude; the real-representing
    // invariant requires this below 1e-12
    double imag_defect() const {
        const double mx = max_abs();
        if (mx == 0.0) return 0.0;
        double mi = 0.0;
        for (const auto& v : values) mi = std::max(mi, std::abs(v.imag()));
        return mi / mx;
    }
};

struct SpectralCoefficients {
    ManifoldModel manifold;
    std::vector<std::complex<double>> c;  // dense over the mode box, row-major

    SpectralCoefficients() = default;
    explicit SpectralCoefficients(const ManifoldModel& m)
        : manifold(m), c(std::size_t(m.mode_count())) {}

    std::size_t index(const std::array<int, 3>& k) const {
        std::size_t idx = 0;
        for (int i = 0; i < manifold.dim; ++i) {
            const int ki = k[std::size_t(i)];
            const int K = manifold.kmax[std::size_t(i)];
            if (ki < -K || ki > K)
                throw std::out_of_range("SpectralCoefficients: mode outside band");
            idx = idx * std::size_t(2 * K + 1) + std::size_t(ki + K);
        }
        return idx;
    }

    std::array<int, 3> mode_of(std::size_t idx) const {
        std::array<int, 3> k{0, 0, 0};
        for (int i = manifold.dim - 1; i >= 0; --i) {
            const int K = manifold.kmax[std::size_t(i)];
            const std::size_t w = std::size_t(2 * K + 1);
            k[std::size_t(i)] = int(idx % w) - K;
            idx /= w;
        }
        return k;
    }

    std::complex<double>& at(const std::array<int, 3>& k) { return c[index(k)]; }
    const std::complex<double>& at(const std::array<int, 3>& k) const { return c[index(k)]; }
};

// u_hat_k = DFT(u)[k mod n] / prod(n_i); trapezoid-exact for band-limited u.
inline SpectralCoefficients forward_transform(const GridFunction& u) {
    const ManifoldModel& m = u.manifold;
    if (u.values.size() != m.grid_size())
        throw std::invalid_argument("forward_transform: grid/manifold mismatch");

    std::vector<Cplx<double>> a(u.values.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = {u.values[i].real(), u.values[i].imag()};
    std::vector<std::size_t> dims(m.grid.begin(), m.grid.begin() + m.dim);
    fft_nd_inplace(a, dims, -1);

    SpectralCoefficients out(m);
    const double scale = 1.0 / double(m.grid_size());
    for (std::size_t idx = 0; idx < out.c.size(); ++idx) {
        const auto k = out.mode_of(idx);
        std::size_t bin = 0;
        for (int i = 0; i < m.dim; ++i) {
            const std::size_t n = m.grid[std::size_t(i)];
            const std::size_t b = std::size_t((k[std::size_t(i)] % std::int64_t(n) + std::int64_t(n)) % std::int64_t(n));
            bin = bin * n + b;
        }
        out.c[idx] = {a[bin].re * scale, a[bin].im * scale};
    }
    return out;
}

// u(x) = sum_k u_hat_k e_k(x) on the manifold grid (or an explicit
// power-of-two grid), by zero-embedding and inverse FFT.  Strict: all
// stored modes must fit the target band.
inline GridFunction inverse_transform(const SpectralCoefficients& coef,
                                      std::array<std::size_t, 3> grid_override = {0, 0, 0}) {
    const ManifoldModel& m = coef.manifold;
    std::array<std::size_t, 3> g = m.grid;
    if (grid_override[0]) g = grid_override;

    std::size_t total = 1;
    std::vector<std::size_t> dims;
    for (int i = 0; i < m.dim; ++i) {
        if (g[std::size_t(i)] < std::size_t(2 * m.kmax[std::size_t(i)] + 1))
            throw std::invalid_argument("inverse_transform: mode outside target band");
        dims.push_back(g[std::size_t(i)]);
        total *= g[std::size_t(i)];
    }

    std::vector<Cplx<double>> a(total, Cplx<double>{0.0, 0.0});
    for (std::size_t idx = 0; idx < coef.c.size(); ++idx) {
        const auto k = coef.mode_of(idx);
        std::size_t bin = 0;
        for (int i = 0; i < m.dim; ++i) {
            const std::size_t n = g[std::size_t(i)];
            const std::size_t b = std::size_t((k[std::size_t(i)] % std::int64_t(n) + std::int64_t(n)) % std::int64_t(n));
            bin = bin * n + b;
        }
        a[bin] = {coef.c[idx].real(), coef.c[idx].imag()};
    }
    fft_nd_inplace(a, dims, +1);

    GridFunction out;
    out.manifold = m;
    for (int i = 0; i < 3; ++i) out.manifold.grid[std::size_t(i)] = (i < m.dim) ? g[std::size_t(i)] : 1;
    out.values.resize(total);
    for (std::size_t i = 0; i < total; ++i) out.values[i] = {a[i].re, a[i].im};
    out.real_representing = (out.imag_defect() < 1e-12);
    return out;
}

// || (1+Delta)^{s/2} u ||_L2 = sqrt( vol * sum_k (1+lambda_k)^s |u_hat_k|^2 )
inline double sobolev_norm(const SpectralCoefficients& coef, double s) {
    const ManifoldModel& m = coef.manifold;
    double acc = 0.0;
    for (std::size_t idx = 0; idx < coef.c.size(); ++idx) {
        const double a2 = std::norm(coef.c[idx]);
        if (a2 == 0.0) continue;
        const double lam = eigenvalue(m, coef.mode_of(idx));
        acc += std::pow(1.0 + lam, s) * a2;
    }
    return std::sqrt(m.volume() * acc);
}

inline double l2_norm(const SpectralCoefficients& coef) { return sobolev_norm(coef, 0.0); }

}  // namespace wavereg
