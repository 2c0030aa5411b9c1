// distributions.hpp — the catalog of compactly supported test distributions
// with ground-truth metadata: exact spectral coefficients, support geometry,
// Sobolev order, and wavefront data.  Every axiom check in the harness is
// scored against these.
//
// Members live as exact coefficient formulas, never as grid samples; scans
// need modes far beyond any fixed grid and sampling would alias.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavereg/manifold.hpp"

namespace wavereg {

enum class SupportKind { PointLike, Line, Full };

struct TestDistribution {
    std::string id;
    ManifoldModel manifold;
    std::function<std::complex<double>(const std::array<int, 3>&)> coeff;

    double sobolev_order = 0.0;  // largest s0 with w in H^t for all t < s0
    bool smooth = false;         // sobolev_order = +inf

    SupportKind support_kind = SupportKind::PointLike;
    Point anchor{0.0, 0.0, 0.0};  // point / line offset, also the singular locus
    int line_axis = 0;            // for Line: the coordinate that is pinned

    bool has_wavefront = false;   // false: WF is empty
    bool all_directions_singular = false;  // point masses: every direction
    // singular directions at singular-support points, as unit vectors
    std::vector<std::array<double, 2>> singular_directions;

    // distance from x to the support locus (0 everywhere for Full)
    double support_distance(const Point& x) const {
        switch (support_kind) {
            case SupportKind::Full:
                return 0.0;
            case SupportKind::PointLike:
                return geodesic_distance(manifold, x, anchor);
            case SupportKind::Line: {
                double d = std::abs(x[std::size_t(line_axis)] - anchor[std::size_t(line_axis)]);
                const double L = manifold.lengths[std::size_t(line_axis)];
                d = std::fmod(d, L);
                return std::min(d, L - d);
            }
        }
        return 0.0;
    }

    // distance from x to the singular support (+inf if WF is empty)
    double singular_distance(const Point& x) const {
        if (!has_wavefront) return std::numeric_limits<double>::infinity();
        if (support_kind == SupportKind::Line) {
            double d = std::abs(x[std::size_t(line_axis)] - anchor[std::size_t(line_axis)]);
            const double L = manifold.lengths[std::size_t(line_axis)];
            d = std::fmod(d, L);
            return std::min(d, L - d);
        }
        return geodesic_distance(manifold, x, anchor);
    }

    bool is_singular_direction(const std::array<double, 2>& dir, double tol = 1e-9) const {
        if (all_directions_singular) return true;
        for (const auto& s : singular_directions) {
            const double dot = dir[0] * s[0] + dir[1] * s[1];
            if (dot > 1.0 - tol) return true;
        }
        return false;
    }
};

// ids: dirac, dirac_derivative, sawtooth_jump, line_delta, smooth_bump, plane_wave
inline TestDistribution make_distribution(const std::string& id, const ManifoldModel& m,
                                          Point x0 = {0.0, 0.0, 0.0}, int mode = 1) {
    TestDistribution w;
    w.id = id;
    w.manifold = m;
    w.anchor = x0;
    const double vol = m.volume();
    const int dim = m.dim;

    auto phase = [m, x0](const std::array<int, 3>& k) {
        double arg = 0.0;
        for (int i = 0; i < m.dim; ++i) arg += m.freq(i, k[std::size_t(i)]) * x0[std::size_t(i)];
        return std::complex<double>(std::cos(arg), -std::sin(arg));
    };

    if (id == "dirac") {
        w.coeff = [vol, phase](const std::array<int, 3>& k) { return phase(k) / vol; };
        w.sobolev_order = -double(dim) / 2.0;
        w.support_kind = SupportKind::PointLike;
        w.has_wavefront = true;
        w.all_directions_singular = true;
    } else if (id == "dirac_derivative") {
        if (dim != 1) throw std::invalid_argument("dirac_derivative: circle only");
        w.coeff = [vol, phase](const std::array<int, 3>& k) {
            return std::complex<double>(0.0, double(k[0])) * phase(k) / vol;
        };
        w.sobolev_order = -1.5;
        w.support_kind = SupportKind::PointLike;
        w.has_wavefront = true;
        w.all_directions_singular = true;
    } else if (id == "sawtooth_jump") {
        if (dim != 1) throw std::invalid_argument("sawtooth_jump: circle only");
        // (pi - theta)/(2 pi) on (0, 2 pi), shifted to jump at x0: unit jump
        w.coeff = [phase](const std::array<int, 3>& k) {
            if (k[0] == 0) return std::complex<double>(0.0, 0.0);
            return phase(k) / std::complex<double>(0.0, kTwoPi * double(k[0]));
        };
        w.sobolev_order = 0.5;
        w.support_kind = SupportKind::Full;
        w.has_wavefront = true;
        w.singular_directions = {{1.0, 0.0}, {-1.0, 0.0}};
    } else if (id == "line_delta") {
        if (dim != 2) throw std::invalid_argument("line_delta: torus only");
        // delta on the line {x = x0[0]}; conormal direction is the x-axis
        const double Ly = m.lengths[1];
        w.coeff = [m, x0, Ly](const std::array<int, 3>& k) {
            if (k[1] != 0) return std::complex<double>(0.0, 0.0);
            const double arg = m.freq(0, k[0]) * x0[0];
            return std::complex<double>(std::cos(arg), -std::sin(arg)) / (m.volume() / Ly);
        };
        w.sobolev_order = -0.5;
        w.support_kind = SupportKind::Line;
        w.line_axis = 0;
        w.has_wavefront = true;
        w.singular_directions = {{1.0, 0.0}, {-1.0, 0.0}};
    } else if (id == "smooth_bump") {
        // band-limited, Gaussian-tapered coefficients; as a band-limited
        // function it is analytic: smooth, empty wavefront set
        const int kb = 8;
        w.coeff = [m, vol, phase, kb](const std::array<int, 3>& k) {
            double q = 0.0;
            for (int i = 0; i < m.dim; ++i) {
                if (std::abs(k[std::size_t(i)]) > kb) return std::complex<double>(0.0, 0.0);
                q += double(k[std::size_t(i)]) * double(k[std::size_t(i)]);
            }
            return std::exp(-4.0 * q / double(kb * kb)) * phase(k) / vol;
        };
        w.sobolev_order = std::numeric_limits<double>::infinity();
        w.smooth = true;
        w.support_kind = SupportKind::Full;
        w.has_wavefront = false;
    } else if (id == "plane_wave") {
        const int k0 = mode;
        w.coeff = [k0](const std::array<int, 3>& k) {
            const bool hit = (k[0] == k0) && (k[1] == 0) && (k[2] == 0);
            return std::complex<double>(hit ? 1.0 : 0.0, 0.0);
        };
        w.sobolev_order = std::numeric_limits<double>::infinity();
        w.smooth = true;
        w.support_kind = SupportKind::Full;
        w.has_wavefront = false;
    } else {
        throw std::invalid_argument("make_distribution: unknown id '" + id + "'");
    }
    return w;
}

// truncated coefficients of w up to |k_i| <= K
inline SpectralCoefficients truncate(const TestDistribution& w, int K) {
    ManifoldModel m = w.manifold;
    for (int i = 0; i < m.dim; ++i) {
        m.kmax[std::size_t(i)] = K;
        m.grid[std::size_t(i)] = next_pow2(std::size_t(2 * K + 1));
    }
    SpectralCoefficients c(m);
    for (std::size_t idx = 0; idx < c.c.size(); ++idx) c.c[idx] = w.coeff(c.mode_of(idx));
    return c;
}

// bilinear pairing <w, psi> = vol * sum_{|k| <= K} w_hat_k psi_hat_{-k},
// matching integral of w * psi against the Riemannian volume.
inline std::complex<double> pair(const TestDistribution& w, const SpectralCoefficients& psi,
                                 int K) {
    const ManifoldModel& m = psi.manifold;
    for (int i = 0; i < m.dim; ++i)
        if (K > m.kmax[std::size_t(i)])
            throw std::invalid_argument("pair: K exceeds the band of the test function");
    std::complex<double> acc{0.0, 0.0};
    std::array<int, 3> k{0, 0, 0}, nk{0, 0, 0};
    const int K1 = m.dim > 1 ? K : 0;
    for (int k0 = -K; k0 <= K; ++k0)
        for (int k1 = -K1; k1 <= K1; ++k1) {
            k = {k0, k1, 0};
            nk = {-k0, -k1, 0};
            acc += w.coeff(k) * psi.at(nk);
        }
    return acc * w.manifold.volume();
}

inline std::complex<double> pair(const TestDistribution& w, const GridFunction& psi, int K) {
    return pair(w, forward_transform(psi), K);
}

}  // namespace wavereg
