// microlocal.hpp — wavefront-set estimation for regularization nets.
//
// A probe fixes a base point, a compactly supported window equal to 1
// there, and a set of unit directions.  For each epsilon the windowed
// field is Fourier-transformed and sampled along dyadic ray radii; for
// each decay order l the quantity
//
//   D_l(eps) = sup_t (1 + t)^l |(window * T_eps w)^hat(t v)|
//
// is fitted against eps, giving the growth exponent N(l).  A direction is
// microlocally regular when one exponent bound works for every l — the
// fitted N(l) stays flat in l — and singular when N(l) climbs with l
// (for a point mass N(l) ~ l: the sup rides the multiplier edge at
// |xi| ~ 1/eps).  Ray magnitudes below an absolute floor are discarded
// rather than amplified by (1+t)^l; directions whose content sits
// entirely at the floor are regular with margin to spare.
//
// Verdicts can only be falsified, never certified, from finitely many
// epsilon; reports carry the tested range.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wavereg/asymptotics.hpp"
#include "wavereg/distributions.hpp"
#include "wavereg/regularizer.hpp"

namespace wavereg {

struct ConeProbe {
    Point x0{0.0, 0.0, 0.0};
    double window_radius = 0.3;  // window == 1 inside radius/2, 0 outside radius
    std::vector<std::array<double, 2>> directions;
    double cone_half_angle_deg = 15.0;   // extra rays sampled inside the cone (dim 2)
    std::vector<int> decay_orders{2, 4, 6, 8};

    // The weighted magnitude (1+t)^l |phi_hat|-tail of *regular* content
    // peaks near t = 4 l^2 / r for a window of radius r.  The ray ladder
    // must always include that peak — it is epsilon-independent, which is
    // exactly what makes regular directions read as flat — so the ladder
    // extent never drops below this.
    double fixed_extent() const {
        const int lmax = decay_orders.empty() ? 8 : decay_orders.back();
        return 5.0 * double(lmax) * double(lmax) / window_radius;
    }
};

inline std::vector<std::array<double, 2>> circle_directions() { return {{1.0, 0.0}, {-1.0, 0.0}}; }

inline std::vector<std::array<double, 2>> torus_directions(int count = 16) {
    std::vector<std::array<double, 2>> d;
    for (int j = 0; j < count; ++j) {
        const double th = kTwoPi * double(j) / double(count);
        d.push_back({std::cos(th), std::sin(th)});
    }
    return d;
}

// window samples on the grid of u
inline std::vector<double> probe_window(const ManifoldModel& m, const Point& x0, double radius) {
    std::vector<double> w(m.grid_size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double d = geodesic_distance(m, m.grid_point(j), x0);
        w[j] = d >= radius ? 0.0 : plateau_bump(d, radius / 2.0, radius);
    }
    return w;
}

struct RaySpectrum {
    std::array<double, 2> direction{1.0, 0.0};
    std::vector<double> radii;       // dyadic |xi|
    std::vector<double> magnitude;   // |(window u)^hat| along the ray (cone max)
    bool truncated = false;          // ray capped by the represented band
};

// |(window . u)^hat| along dyadic radii in each probe direction.
// max_radius limits the ladder; passing the filter-edge radius b/(2 eps)
// keeps the sup on the informative part of the spectrum instead of the
// operator's super-polynomially decaying overshoot, whose (1+t)^l
// amplification would blur the exponent ladder.
inline std::vector<RaySpectrum> windowed_directional_spectrum(const GridFunction& u,
                                                              const ConeProbe& probe,
                                                              double max_radius = 0.0) {
    const ManifoldModel& m = u.manifold;
    auto win = probe_window(m, probe.x0, probe.window_radius);

    std::vector<Cplx<double>> a(u.values.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        a[j] = {win[j] * u.values[j].real(), win[j] * u.values[j].imag()};
    std::vector<std::size_t> dims(m.grid.begin(), m.grid.begin() + m.dim);
    fft_nd_inplace(a, dims, -1);
    // integral convention: (window u)^hat(xi) = vol * coefficient
    const double scale = m.volume() / double(m.grid_size());

    auto read = [&](std::int64_t k0, std::int64_t k1) {
        std::size_t bin = 0;
        const std::int64_t n0 = std::int64_t(m.grid[0]);
        bin = std::size_t((k0 % n0 + n0) % n0);
        if (m.dim > 1) {
            const std::int64_t n1 = std::int64_t(m.grid[1]);
            bin = bin * std::size_t(n1) + std::size_t((k1 % n1 + n1) % n1);
        }
        return scale * std::hypot(a[bin].re, a[bin].im);
    };

    // band actually represented alias-free on this grid
    std::int64_t band = std::numeric_limits<std::int64_t>::max();
    for (int i = 0; i < m.dim; ++i)
        band = std::min(band, std::int64_t(m.kmax[std::size_t(i)]));
    double cap = double(band) / 2.0;
    if (max_radius > 0.0) cap = std::min(cap, max_radius);

    const double cone_cos = std::cos(probe.cone_half_angle_deg * kPi / 180.0) - 1e-9;

    std::vector<RaySpectrum> out;
    for (const auto& dir : probe.directions) {
        RaySpectrum ray;
        ray.direction = dir;
        std::vector<std::array<double, 2>> rays{dir};
        if (m.dim == 2 && probe.cone_half_angle_deg > 0.0) {
            const double ha = probe.cone_half_angle_deg * kPi / 180.0;
            for (double sgn : {-1.0, 1.0}) {
                const double cs = std::cos(sgn * ha), sn = std::sin(sgn * ha);
                rays.push_back({dir[0] * cs - dir[1] * sn, dir[0] * sn + dir[1] * cs});
            }
        }
        for (double t = 2.0; t <= cap; t *= 2.0) {
            double mx = 0.0;
            bool hit = false;
            for (const auto& v : rays) {
                const std::int64_t k0 = std::llround(t * v[0]);
                const std::int64_t k1 = m.dim > 1 ? std::llround(t * v[1]) : 0;
                if (m.dim > 1) {
                    // rounding may push the lattice point out of the cone;
                    // dropping it keeps adjacent cones from sampling each
                    // other's rays at small radii
                    const double nrm = std::hypot(double(k0), double(k1));
                    if (nrm == 0.0) continue;
                    const double cosang = (double(k0) * dir[0] + double(k1) * dir[1]) / nrm;
                    if (cosang < cone_cos) continue;
                }
                mx = std::max(mx, read(k0, k1));
                hit = true;
            }
            if (!hit) continue;
            ray.radii.push_back(t);
            ray.magnitude.push_back(mx);
        }
        ray.truncated = !ray.radii.empty() && (2.0 * ray.radii.back() > cap);
        out.push_back(std::move(ray));
    }
    return out;
}

// Ray magnitudes below this are treated as instrument noise; (1+t)^l with
// l = 8 amplifies anything kept here by up to ~1e15, so the floor sits
// well above coefficient rounding (~1e-14) and well below genuine content.
inline constexpr double kRayFloor = 1e-11;

struct DirectionVerdict {
    std::array<double, 2> direction{1.0, 0.0};
    bool singular = false;
    bool floor_certified = false;  // every ray value at every eps sat below the floor
    double spread = 0.0;           // max_l N(l) - min_l N(l)
    double max_exponent = 0.0;     // max_l N(l)
    std::vector<double> exponents;  // N(l) per decay order
};

struct ProbeReport {
    Point x0{0.0, 0.0, 0.0};
    std::vector<DirectionVerdict> directions;
};

struct WavefrontReport {
    std::vector<ProbeReport> probes;
    double eps_max = 0.0, eps_min = 0.0;  // tested range stamp
    // confusion vs declared ground truth
    int true_singular = 0;
    int false_negatives = 0;
    int false_positives_near = 0;  // within 3 window radii of singular support
    int false_positives_far = 0;
    int true_regular = 0;
};

// decide singular/regular from the fitted exponent ladder:
//   regular  <=>  exponents flat in l (spread < 0.5) or nothing above floor
//                 or all exponents negative (content collapses with eps)
//   singular <=>  exponents climb with l and reach a genuine growth rate
inline DirectionVerdict judge_direction(const std::array<double, 2>& dir,
                                        const std::vector<int>& orders,
                                        const std::vector<double>& eps_used,
                                        const std::vector<std::vector<double>>& d_l) {
    DirectionVerdict v;
    v.direction = dir;
    std::vector<double> x, y;
    for (int li = 0; li < int(orders.size()); ++li) {
        x.clear();
        y.clear();
        for (std::size_t e = 0; e < eps_used.size(); ++e)
            if (d_l[std::size_t(li)][e] > 0.0) {
                x.push_back(std::log(eps_used[e]));
                y.push_back(std::log(d_l[std::size_t(li)][e]));
            }
        if (x.size() < 2) {
            v.exponents.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        auto f = detail::fit_line(x, y);
        v.exponents.push_back(-f.slope);  // D_l ~ eps^{-N}
    }
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    int fitted = 0;
    for (double e : v.exponents)
        if (std::isfinite(e)) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
            ++fitted;
        }
    if (fitted < 2) {
        v.floor_certified = true;
        v.singular = false;
        return v;
    }
    v.spread = hi - lo;
    v.max_exponent = hi;
    // singular content both loses uniformity across l and genuinely grows
    // with 1/eps; collapsing or flat ladders are regular
    v.singular = (v.spread >= 0.5) && (v.max_exponent >= 1.0);
    return v;
}

inline double microlocal_ray_extent(const RegularizationProcess& p, const ConeProbe& probe,
                                    double eps) {
    double cap = probe.fixed_extent();
    if (p.kind == ProcessKind::WaveWindow || p.kind == ProcessKind::Mollifier)
        cap = std::max(cap, p.filter.b / (2.0 * eps));
    return cap;
}

// grid large enough that reading the ladder up to the extent stays
// alias-free against the full represented band
inline std::array<std::size_t, 3> microlocal_render_grid(const RegularizationProcess& p,
                                                         const ConeProbe& probe, double eps) {
    const auto K = p.band(eps);
    const double ext = microlocal_ray_extent(p, probe, eps);
    std::array<std::size_t, 3> g{1, 1, 1};
    for (int i = 0; i < p.manifold.dim; ++i)
        g[std::size_t(i)] = next_pow2(std::size_t(double(K[std::size_t(i)]) + ext + 256.0));
    return g;
}

// Fitted exponent per (decay order, direction) of sup_t (1+t)^l |...|.
// Floored ray values are excluded from the sup; an eps with nothing above
// the floor contributes no point.
inline ProbeReport cone_decay_scan(const RegularizationProcess& p, const TestDistribution& w,
                                   const ConeProbe& probe, const std::vector<double>& eps_grid,
                                   const std::vector<GridFunction>* pre_rendered = nullptr) {
    ProbeReport rep;
    rep.x0 = probe.x0;

    // magnitudes per (eps, direction, radius); the ladder reaches the
    // filter-edge radius (which carries the singular signature) but never
    // shrinks below the fixed extent that regular content needs
    std::vector<std::vector<RaySpectrum>> all;
    for (std::size_t e = 0; e < eps_grid.size(); ++e) {
        const double cap = microlocal_ray_extent(p, probe, eps_grid[e]);
        const GridFunction* u;
        GridFunction local;
        if (pre_rendered) {
            u = &(*pre_rendered)[e];
        } else {
            local = apply_spectral(p, w, eps_grid[e],
                                   microlocal_render_grid(p, probe, eps_grid[e]));
            u = &local;
        }
        all.push_back(windowed_directional_spectrum(*u, probe, cap));
    }

    for (std::size_t d = 0; d < probe.directions.size(); ++d) {
        std::vector<std::vector<double>> d_l(probe.decay_orders.size(),
                                             std::vector<double>(eps_grid.size(), 0.0));
        for (std::size_t e = 0; e < eps_grid.size(); ++e) {
            const auto& ray = all[e][d];
            for (std::size_t li = 0; li < probe.decay_orders.size(); ++li) {
                double sup = 0.0;
                for (std::size_t t = 0; t < ray.radii.size(); ++t) {
                    if (ray.magnitude[t] <= kRayFloor) continue;
                    sup = std::max(sup, std::pow(1.0 + ray.radii[t],
                                                 double(probe.decay_orders[li])) *
                                            ray.magnitude[t]);
                }
                d_l[li][e] = sup;
            }
        }
        rep.directions.push_back(
            judge_direction(probe.directions[d], probe.decay_orders, eps_grid, d_l));
    }
    return rep;
}

// Full wavefront estimation across probes, compared against the declared
// ground truth of the zoo member.
inline WavefrontReport estimate_wavefront(const RegularizationProcess& p,
                                          const TestDistribution& w,
                                          const std::vector<ConeProbe>& probes,
                                          const std::vector<double>& eps_grid) {
    WavefrontReport rep;
    rep.eps_max = eps_grid.front();
    rep.eps_min = eps_grid.back();

    // render the net once per eps, share across probes; the grid covers
    // the widest ray ladder any probe will read
    std::vector<GridFunction> rendered;
    rendered.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        std::array<std::size_t, 3> g{1, 1, 1};
        for (const auto& probe : probes) {
            const auto pg = microlocal_render_grid(p, probe, eps);
            for (int i = 0; i < p.manifold.dim; ++i)
                g[std::size_t(i)] = std::max(g[std::size_t(i)], pg[std::size_t(i)]);
        }
        rendered.push_back(apply_spectral(p, w, eps, g));
    }

    for (const auto& probe : probes) {
        rep.probes.push_back(cone_decay_scan(p, w, probe, eps_grid, &rendered));

        const double dist_sing = w.singular_distance(probe.x0);
        const bool on_singular = dist_sing < probe.window_radius / 2.0;
        const bool near_singular = dist_sing < 3.0 * probe.window_radius;
        for (const auto& dv : rep.probes.back().directions) {
            const bool truth = on_singular && w.is_singular_direction(dv.direction);
            if (truth && dv.singular) ++rep.true_singular;
            if (truth && !dv.singular) ++rep.false_negatives;
            if (!truth && dv.singular) {
                if (near_singular) ++rep.false_positives_near;
                else ++rep.false_positives_far;
            }
            if (!truth && !dv.singular) ++rep.true_regular;
        }
    }
    return rep;
}

}  // namespace wavereg
