// asymptotics.hpp — epsilon scans, log-log slope fitting, and the
// moderate / negligible classifiers.
//
// A scan measures one seminorm of T_eps w over a geometric eps grid; the
// fitted slope s of log(value) against log(eps) is the numerical meaning
// of "O(eps^s)".  Moderateness asks for a finite lower bound on the
// slopes; negligibility asks for decay beating every fixed power, which a
// finite grid can only witness up to a stated order and an absolute floor.
//
// The operators here are so tame that smooth residuals decay faster than
// any power (roughly exp(-c/sqrt(eps))): values cross six or more decades
// in two or three grid steps and then drown at the floor.  A straight-line
// fit over the whole window would average the shallow large-eps region
// with the cliff and under-report the terminal rate, so the negligibility
// classifier fits the last few usable points (the terminal decay rate)
// and keeps the full-window fit as a diagnostic.

#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavereg/regularizer.hpp"

namespace wavereg {

struct EpsilonScan {
    std::string process_id;
    std::string distribution_id;
    std::string seminorm_id;
    std::vector<double> eps;     // strictly decreasing, in (0,1]
    std::vector<double> values;  // finite, >= 0

    void validate() const {
        if (eps.size() != values.size() || eps.empty())
            throw std::invalid_argument("EpsilonScan: shape mismatch");
        for (std::size_t i = 0; i < eps.size(); ++i) {
            if (!(eps[i] > 0.0) || eps[i] > 1.0)
                throw std::invalid_argument("EpsilonScan: eps outside (0,1]");
            if (i && !(eps[i] < eps[i - 1]))
                throw std::invalid_argument("EpsilonScan: eps not strictly decreasing");
            if (!std::isfinite(values[i]) || values[i] < 0.0)
                throw std::invalid_argument("EpsilonScan: bad value");
        }
    }
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;      // in log(value) = slope * log(eps) + intercept
    double r_squared = 0.0;
    double max_residual = 0.0;   // in log space
    std::size_t points = 0;
    bool valid = false;
};

namespace detail {

inline SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    SlopeFit f;
    const std::size_t n = x.size();
    if (n < 2) return f;
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += r * r;
        f.max_residual = std::max(f.max_residual, std::abs(r));
    }
    f.r_squared = syy == 0.0 ? 1.0 : std::max(0.0, 1.0 - ss_res / syy);
    f.points = n;
    f.valid = true;
    return f;
}

}  // namespace detail

// least-squares line through (log eps, log value) over [first, first+count)
inline SlopeFit fit_slope(const EpsilonScan& scan, std::size_t first = 0, std::size_t count = 0) {
    scan.validate();
    if (count == 0) count = scan.eps.size() - first;
    if (first + count > scan.eps.size())
        throw std::invalid_argument("fit_slope: window out of range");
    std::vector<double> x, y;
    for (std::size_t i = first; i < first + count; ++i) {
        if (scan.values[i] <= 0.0) continue;  // floor-dominated points dropped
        x.push_back(std::log(scan.eps[i]));
        y.push_back(std::log(scan.values[i]));
    }
    if (x.size() < 5)
        throw std::invalid_argument("fit_slope: fewer than 5 usable points (insufficient data)");
    return detail::fit_line(x, y);
}

// ---------------------------------------------------------------------------
// seminorm evaluation
// ---------------------------------------------------------------------------

// ids: "L2", "H1", "H2" (Sobolev norms) and "sup0".."sup4" (max norm of the
// j-th spectral derivative, per-axis maximum on tori)
inline std::vector<std::string> default_seminorms(int dim) {
    if (dim == 1) return {"L2", "H1", "H2", "sup0", "sup1", "sup2", "sup3", "sup4"};
    // on tori the scans stay spectral; the Sobolev ladder generates the
    // smooth topology through the embedding theorem
    return {"L2", "H1", "H2"};
}

inline double seminorm_value(const SpectralCoefficients& c, const std::string& id) {
    if (id == "L2") return sobolev_norm(c, 0.0);
    if (id == "H1") return sobolev_norm(c, 1.0);
    if (id == "H2") return sobolev_norm(c, 2.0);
    if (id.rfind("sup", 0) == 0) {
        const int order = std::stoi(id.substr(3));
        const ManifoldModel& m = c.manifold;
        double worst = 0.0;
        for (int axis = 0; axis < m.dim; ++axis) {
            SpectralCoefficients d = c;
            if (order > 0) {
                for (std::size_t idx = 0; idx < d.c.size(); ++idx) {
                    const auto k = d.mode_of(idx);
                    const std::complex<double> ik(0.0, m.freq(axis, k[std::size_t(axis)]));
                    std::complex<double> fac(1.0, 0.0);
                    for (int p = 0; p < order; ++p) fac *= ik;
                    d.c[idx] *= fac;
                }
            }
            worst = std::max(worst, inverse_transform(d).max_abs());
            if (order == 0) break;  // axes coincide
        }
        return worst;
    }
    throw std::invalid_argument("seminorm_value: unknown id '" + id + "'");
}

// ---------------------------------------------------------------------------
// scans
// ---------------------------------------------------------------------------

inline std::vector<double> geometric_grid(double start, double ratio, std::size_t count) {
    if (!(start > 0.0) || start > 1.0 || !(ratio > 0.0) || ratio >= 1.0 || count == 0)
        throw std::invalid_argument("geometric_grid: need start in (0,1], ratio in (0,1)");
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) g[i] = start * std::pow(ratio, double(i));
    return g;
}

inline void check_scan_grid(const std::vector<double>& eps_grid) {
    if (eps_grid.size() < 8)
        throw std::invalid_argument("run_scan: need at least 8 epsilon points");
    for (std::size_t i = 1; i < eps_grid.size(); ++i) {
        const double r = eps_grid[i] / eps_grid[i - 1];
        if (r < 0.25 - 1e-12 || r > 0.75 + 1e-12)
            throw std::invalid_argument("run_scan: grid ratio outside [1/4, 3/4]");
    }
}

// one scan per requested seminorm, evaluated on the spectral output
inline std::vector<EpsilonScan> run_scan(const RegularizationProcess& p,
                                         const TestDistribution& w,
                                         const std::vector<std::string>& seminorms,
                                         const std::vector<double>& eps_grid) {
    check_scan_grid(eps_grid);
    std::vector<EpsilonScan> out(seminorms.size());
    for (std::size_t s = 0; s < seminorms.size(); ++s) {
        out[s].process_id = to_string(p.kind);
        out[s].distribution_id = w.id;
        out[s].seminorm_id = seminorms[s];
    }
    for (double eps : eps_grid) {
        auto coeffs = apply_spectral_coeffs(p, w, eps);
        for (std::size_t s = 0; s < seminorms.size(); ++s) {
            out[s].eps.push_back(eps);
            out[s].values.push_back(seminorm_value(coeffs, seminorms[s]));
        }
    }
    for (auto& sc : out) sc.validate();
    return out;
}

// residual scans of T_eps u - u (or any prepared radial residual family)
template <class PrepareRadial>
inline std::vector<EpsilonScan> run_residual_scan(const RegularizationProcess& p,
                                                  const TestDistribution& w,
                                                  const std::vector<std::string>& seminorms,
                                                  const std::vector<double>& eps_grid,
                                                  PrepareRadial&& prep, const std::string& tag) {
    std::vector<EpsilonScan> out(seminorms.size());
    for (std::size_t s = 0; s < seminorms.size(); ++s) {
        out[s].process_id = to_string(p.kind) + tag;
        out[s].distribution_id = w.id;
        out[s].seminorm_id = seminorms[s];
    }
    for (double eps : eps_grid) {
        RadialMultiplier radial = prep(eps);
        auto coeffs = apply_spectral_coeffs(p, w, radial, p.band(eps));
        for (std::size_t s = 0; s < seminorms.size(); ++s) {
            out[s].eps.push_back(eps);
            out[s].values.push_back(seminorm_value(coeffs, seminorms[s]));
        }
    }
    for (auto& sc : out) sc.validate();
    return out;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

inline constexpr double kScanFloor = 1e-12;

struct SeminormVerdict {
    std::string seminorm_id;
    bool ok = false;
    std::string reason;          // "floor", "tail-slope", "full-slope", ...
    double tail_slope = std::numeric_limits<double>::quiet_NaN();
    double full_slope = std::numeric_limits<double>::quiet_NaN();
    std::size_t usable = 0;
};

struct ClassifyResult {
    bool verdict = false;
    double exponent = 0.0;  // moderate: N with values O(eps^-N); negligible: weakest tail slope
    std::vector<SeminormVerdict> per_seminorm;
};

// moderate: every seminorm admits a finite power bound; reports
// N = ceil(-min slope)
inline ClassifyResult classify_moderate(const std::vector<EpsilonScan>& scans) {
    ClassifyResult res;
    res.verdict = true;
    double min_slope = 0.0;
    for (const auto& sc : scans) {
        sc.validate();
        SeminormVerdict v;
        v.seminorm_id = sc.seminorm_id;
        std::vector<double> x, y;
        for (std::size_t i = 0; i < sc.eps.size(); ++i)
            if (sc.values[i] > kScanFloor) {
                x.push_back(std::log(sc.eps[i]));
                y.push_back(std::log(sc.values[i]));
            }
        v.usable = x.size();
        if (x.size() < 2) {
            // everything at the floor: certainly moderate
            v.ok = true;
            v.reason = "floor";
        } else {
            auto f = detail::fit_line(x, y);
            v.full_slope = f.slope;
            v.ok = f.valid && std::isfinite(f.slope);
            v.reason = "full-slope";
            if (v.ok) min_slope = std::min(min_slope, f.slope);
        }
        res.verdict = res.verdict && v.ok;
        res.per_seminorm.push_back(v);
    }
    res.exponent = std::ceil(-min_slope);
    return res;
}

// negligible up to order m_max or down to the floor: values must either
// sit below the absolute floor or end in a terminal decay steeper than
// m_max.  Usable points must form a prefix (decay, then floor).
inline ClassifyResult classify_negligible(const std::vector<EpsilonScan>& scans, double m_max,
                                          double floor = kScanFloor) {
    ClassifyResult res;
    res.verdict = true;
    res.exponent = std::numeric_limits<double>::infinity();
    for (const auto& sc : scans) {
        sc.validate();
        SeminormVerdict v;
        v.seminorm_id = sc.seminorm_id;
        std::size_t usable = 0;
        while (usable < sc.values.size() && sc.values[usable] > floor) ++usable;
        bool prefix = true;
        for (std::size_t i = usable; i < sc.values.size(); ++i)
            if (sc.values[i] > floor) prefix = false;
        v.usable = usable;

        if (!prefix) {
            v.ok = false;
            v.reason = "values re-emerge above the floor";
        } else if (usable <= 1) {
            // at most the largest-eps point shows anything: floor-certified
            v.ok = true;
            v.reason = "floor";
        } else {
            // terminal decay rate: the steepest suffix window ending at the
            // last usable point.  Suffixes must span two decades in value so
            // that near-floor noise pairs cannot fake a steep slope.
            double best = -std::numeric_limits<double>::infinity();
            std::vector<double> x, y;
            for (std::size_t start = usable - 1; start-- > 0;) {
                if (sc.values[start] < 1e2 * sc.values[usable - 1]) continue;
                x.clear();
                y.clear();
                for (std::size_t i = start; i < usable; ++i) {
                    x.push_back(std::log(sc.eps[i]));
                    y.push_back(std::log(sc.values[i]));
                }
                auto fit = detail::fit_line(x, y);
                if (fit.valid) best = std::max(best, fit.slope);
            }
            std::vector<double> xf, yf;
            for (std::size_t i = 0; i < usable; ++i) {
                xf.push_back(std::log(sc.eps[i]));
                yf.push_back(std::log(sc.values[i]));
            }
            auto full = detail::fit_line(xf, yf);
            v.full_slope = full.valid ? full.slope : best;
            v.tail_slope = std::isfinite(best) ? best : v.full_slope;
            v.ok = std::isfinite(v.tail_slope) && v.tail_slope > m_max;
            v.reason = "tail-slope";
            if (v.ok) res.exponent = std::min(res.exponent, v.tail_slope);
        }
        res.verdict = res.verdict && v.ok;
        res.per_seminorm.push_back(v);
    }
    return res;
}

}  // namespace wavereg
