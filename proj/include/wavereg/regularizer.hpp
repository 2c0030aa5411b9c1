// regularizer.hpp — the regularization processes and their spectral
// application to test distributions.
//
// A process is a manifold plus a multiplier family m_eps(lambda):
//
//   wave_window   m = (psi_c * F_eps)(lambda)  — the production operator,
//                 properly supported with kernel radius 2c by finite
//                 propagation speed of the wave group
//   mollifier     m = F(eps lambda)            — cutoff-free functional
//                 calculus; equals spectral convolution with the mollifier
//                 rho defined by rho_hat = F(| . |)
//   heat_contrast m = exp(-eps lambda^2)       — negative control: smooth
//                 but globally supported kernel
//   sharp_contrast m = [lambda <= 1/eps]       — negative control: sharp
//                 truncation, Dirichlet-kernel tails
//
// Application is mode-wise multiplication; grids may be smaller than the
// spectral band, in which case modes fold (point sampling of the true
// field, used by the fixed-grid kernel support tests).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "wavereg/distributions.hpp"
#include "wavereg/filter.hpp"
#include "wavereg/manifold.hpp"
#include "wavereg/multiplier.hpp"

namespace wavereg {

enum class ProcessKind { WaveWindow, Mollifier, HeatContrast, SharpContrast };

inline const char* to_string(ProcessKind k) {
    switch (k) {
        case ProcessKind::WaveWindow: return "wave_window";
        case ProcessKind::Mollifier: return "mollifier";
        case ProcessKind::HeatContrast: return "heat_contrast";
        case ProcessKind::SharpContrast: return "sharp_contrast";
    }
    return "?";
}

// A radial multiplier evaluated once per (process, eps): dense at the
// integer frequencies on the circle (where sqrt(lambda_k) = |k|), a
// uniform interpolation table on tori.
class RadialMultiplier {
  public:
    RadialMultiplier() = default;

    template <class Eval>
    static RadialMultiplier dense_integer(double lambda_max, Eval&& eval) {
        RadialMultiplier r;
        r.integer_mode_ = true;
        r.step_ = 1.0;
        r.val_.resize(std::size_t(std::ceil(lambda_max)) + 2);
        for (std::size_t i = 0; i < r.val_.size(); ++i) r.val_[i] = eval(double(i));
        return r;
    }

    template <class Eval>
    static RadialMultiplier interp_table(double lambda_max, double step, Eval&& eval) {
        RadialMultiplier r;
        r.integer_mode_ = false;
        r.step_ = step;
        r.val_.resize(std::size_t(lambda_max / step) + 8);
        for (std::size_t i = 0; i < r.val_.size(); ++i) r.val_[i] = eval(double(i) * step);
        return r;
    }

    double operator()(double lambda) const {
        const double y = std::abs(lambda);
        if (integer_mode_) {
            const std::size_t i = std::size_t(std::llround(y));
            return i < val_.size() ? val_[i] : 0.0;
        }
        if (y >= step_ * double(val_.size() - 1)) return 0.0;
        return detail::interp6(val_, step_, y);
    }

    double lambda_max() const { return step_ * double(val_.size() - 1); }

  private:
    bool integer_mode_ = true;
    double step_ = 1.0;
    std::vector<double> val_;
};

struct RegularizationProcess {
    ManifoldModel manifold;
    FilterSpec filter;
    CutoffSpec cutoff;
    ProcessKind kind = ProcessKind::WaveWindow;
    double eps_min = 1.0 / 4096.0;  // smallest scan epsilon the tables support

    std::shared_ptr<const FilterValueTable> fval;
    std::shared_ptr<const FilterFourierTable> fhat;
    std::shared_ptr<const CutoffKernelTable> psi;

    static RegularizationProcess wave_window(const ManifoldModel& m, const FilterSpec& f,
                                             const CutoffSpec& phi, double eps_min) {
        RegularizationProcess p;
        p.manifold = m;
        p.filter = f;
        p.cutoff = phi;
        p.kind = ProcessKind::WaveWindow;
        p.eps_min = eps_min;
        p.fval = std::make_shared<FilterValueTable>(f);
        p.fhat = std::make_shared<FilterFourierTable>(f, 2.0 * phi.c / eps_min,
                                                      kPi / (20.0 * f.b));
        p.psi = std::make_shared<CutoffKernelTable>(phi, p.min_mode_spacing());
        return p;
    }

    static RegularizationProcess mollifier(const ManifoldModel& m, const FilterSpec& f,
                                           double eps_min) {
        RegularizationProcess p;
        p.manifold = m;
        p.filter = f;
        p.kind = ProcessKind::Mollifier;
        p.eps_min = eps_min;
        p.fval = std::make_shared<FilterValueTable>(f);
        return p;
    }

    static RegularizationProcess heat_contrast(const ManifoldModel& m, double eps_min) {
        RegularizationProcess p;
        p.manifold = m;
        p.kind = ProcessKind::HeatContrast;
        p.eps_min = eps_min;
        return p;
    }

    static RegularizationProcess sharp_contrast(const ManifoldModel& m, double eps_min) {
        RegularizationProcess p;
        p.manifold = m;
        p.kind = ProcessKind::SharpContrast;
        p.eps_min = eps_min;
        return p;
    }

    double min_mode_spacing() const {
        double s = std::numeric_limits<double>::infinity();
        for (int i = 0; i < manifold.dim; ++i) s = std::min(s, kTwoPi / manifold.lengths[i]);
        return s;
    }

    // frequency radius beyond which the multiplier is numerically negligible
    double lambda_support(double eps) const {
        check_eps(eps);
        switch (kind) {
            case ProcessKind::WaveWindow:
                return filter.b / eps + psi->tail_width(1e-13);
            case ProcessKind::Mollifier:
                return filter.b / eps;
            case ProcessKind::HeatContrast:
                return std::sqrt(37.0 / eps);  // exp(-eps lambda^2) < 1e-16 beyond
            case ProcessKind::SharpContrast:
                return 1.0 / eps;
        }
        return 0.0;
    }

    // per-dimension mode band covering lambda_support
    std::array<int, 3> band(double eps) const {
        std::array<int, 3> K{0, 0, 0};
        const double lam = lambda_support(eps);
        for (int i = 0; i < manifold.dim; ++i)
            K[std::size_t(i)] = int(std::ceil(lam * manifold.lengths[std::size_t(i)] / kTwoPi));
        return K;
    }

    // exact multiplier value at one frequency (reference path)
    double multiplier(double lambda, double eps) const {
        check_eps(eps);
        switch (kind) {
            case ProcessKind::WaveWindow:
                return conv_multiplier(*psi, *fval, lambda, eps);
            case ProcessKind::Mollifier:
                return (*fval)(eps * lambda);
            case ProcessKind::HeatContrast:
                return std::exp(-eps * lambda * lambda);
            case ProcessKind::SharpContrast:
                return std::abs(lambda) <= 1.0 / eps ? 1.0 : 0.0;
        }
        return 0.0;
    }

    double multiplier_minus_one(double lambda, double eps) const {
        check_eps(eps);
        switch (kind) {
            case ProcessKind::WaveWindow:
                return conv_multiplier_minus_one(*psi, *fval, lambda, eps);
            case ProcessKind::Mollifier: {
                const double x = std::abs(eps * lambda);
                return x <= filter.a ? 0.0 : (*fval)(x) - 1.0;
            }
            case ProcessKind::HeatContrast:
                return std::expm1(-eps * lambda * lambda);
            case ProcessKind::SharpContrast:
                return std::abs(lambda) <= 1.0 / eps ? 0.0 : -1.0;
        }
        return 0.0;
    }

    // time-quadrature cross-check of the defining integral (wave window only)
    double multiplier_time_quadrature(double lambda, double eps) const {
        if (kind != ProcessKind::WaveWindow)
            throw std::logic_error("time quadrature path exists for the wave window only");
        check_eps(eps);
        return squad_multiplier(cutoff, *fhat, lambda, eps);
    }

    RadialMultiplier prepare(double eps) const {
        return prepare_eval(eps, [&](double lam) { return multiplier(lam, eps); });
    }

    RadialMultiplier prepare_minus_one(double eps) const {
        return prepare_eval(eps, [&](double lam) { return multiplier_minus_one(lam, eps); });
    }

    // deviation of the wave-window multiplier from the bare mollifier value
    RadialMultiplier prepare_minus_bare(double eps) const {
        if (kind != ProcessKind::WaveWindow)
            throw std::logic_error("minus_bare applies to the wave window only");
        return prepare_eval(
            eps, [&](double lam) { return conv_multiplier_minus_bare(*psi, *fval, lam, eps); });
    }

    template <class Eval>
    RadialMultiplier prepare_eval(double eps, Eval&& eval) const {
        const double lam_max = lambda_support(eps) + 2.0;
        if (manifold.kind == ManifoldKind::Circle)
            return RadialMultiplier::dense_integer(lam_max, eval);
        return RadialMultiplier::interp_table(lam_max, min_mode_spacing() / 8.0, eval);
    }

    void check_eps(double eps) const {
        if (!(eps > 0.0) || eps > 1.0)
            throw std::invalid_argument("process: eps must lie in (0, 1]");
        if (eps < eps_min * (1.0 - 1e-12))
            throw std::invalid_argument("process: eps below the table range (band error)");
    }
};

// multiplier difference of two wave-window processes sharing a filter,
// prepared on the geometry of p1; the difference table is built once by
// the caller and reused across the eps grid
inline RadialMultiplier prepare_cutoff_difference(const CutoffDifferenceTable& dpsi,
                                                  const RegularizationProcess& p1,
                                                  const RegularizationProcess& p2, double eps) {
    if (p1.kind != ProcessKind::WaveWindow || p2.kind != ProcessKind::WaveWindow)
        throw std::logic_error("cutoff difference needs two wave-window processes");
    const double lam_max =
        std::max(p1.lambda_support(eps), p2.lambda_support(eps)) + 2.0;
    auto eval = [&](double lam) {
        return conv_multiplier_difference(dpsi, *p1.fval, lam, eps);
    };
    if (p1.manifold.kind == ManifoldKind::Circle)
        return RadialMultiplier::dense_integer(lam_max, eval);
    return RadialMultiplier::interp_table(lam_max, p1.min_mode_spacing() / 8.0, eval);
}

namespace detail {

// accumulate radial(sqrt(lambda_k)) * w_hat(k) over the mode box into the
// (possibly smaller, folding) grid bins
inline std::vector<Cplx<double>> folded_bins(const ManifoldModel& m,
                                             const TestDistribution& w,
                                             const RadialMultiplier& radial,
                                             const std::array<int, 3>& K,
                                             const std::array<std::size_t, 3>& grid) {
    std::size_t total = 1;
    for (int i = 0; i < m.dim; ++i) total *= grid[std::size_t(i)];
    std::vector<Cplx<double>> bins(total, Cplx<double>{0.0, 0.0});

    const int K0 = K[0], K1 = m.dim > 1 ? K[1] : 0, K2 = m.dim > 2 ? K[2] : 0;
    std::array<int, 3> k{0, 0, 0};
    for (int k0 = -K0; k0 <= K0; ++k0) {
        k[0] = k0;
        for (int k1 = -K1; k1 <= K1; ++k1) {
            k[1] = k1;
            for (int k2 = -K2; k2 <= K2; ++k2) {
                k[2] = k2;
                const double mval = radial(std::sqrt(eigenvalue(m, k)));
                if (mval == 0.0) continue;
                const std::complex<double> cv = w.coeff(k);
                if (cv.real() == 0.0 && cv.imag() == 0.0) continue;
                std::size_t bin = 0;
                for (int i = 0; i < m.dim; ++i) {
                    const std::size_t n = grid[std::size_t(i)];
                    bin = bin * n +
                          std::size_t((k[std::size_t(i)] % int(n) + int(n)) % int(n));
                }
                bins[bin].re += mval * cv.real();
                bins[bin].im += mval * cv.imag();
            }
        }
    }
    return bins;
}

}  // namespace detail

// T_eps w as spectral coefficients over the band K (deterministic; the
// values feed norms, pairings and further mode-wise operators)
inline SpectralCoefficients apply_spectral_coeffs(const RegularizationProcess& p,
                                                  const TestDistribution& w,
                                                  const RadialMultiplier& radial,
                                                  std::array<int, 3> K) {
    ManifoldModel m = p.manifold;
    for (int i = 0; i < m.dim; ++i) {
        m.kmax[std::size_t(i)] = K[std::size_t(i)];
        m.grid[std::size_t(i)] = next_pow2(std::size_t(2 * K[std::size_t(i)] + 1));
    }
    SpectralCoefficients out(m);
    for (std::size_t idx = 0; idx < out.c.size(); ++idx) {
        const auto k = out.mode_of(idx);
        out.c[idx] = radial(std::sqrt(eigenvalue(m, k))) * w.coeff(k);
    }
    return out;
}

inline SpectralCoefficients apply_spectral_coeffs(const RegularizationProcess& p,
                                                  const TestDistribution& w, double eps) {
    return apply_spectral_coeffs(p, w, p.prepare(eps), p.band(eps));
}

// T_eps w sampled on a grid.  If the grid is narrower than the band the
// modes fold, which reproduces point samples of the true field.
inline GridFunction apply_spectral(const RegularizationProcess& p, const TestDistribution& w,
                                   const RadialMultiplier& radial, const std::array<int, 3>& K,
                                   std::array<std::size_t, 3> grid_override = {0, 0, 0}) {
    const ManifoldModel& m = p.manifold;
    if (!w.manifold.same_geometry(m))
        throw std::invalid_argument("apply_spectral: distribution lives on another manifold");

    std::array<std::size_t, 3> g{1, 1, 1};
    for (int i = 0; i < m.dim; ++i)
        g[std::size_t(i)] = grid_override[std::size_t(i)]
                                ? grid_override[std::size_t(i)]
                                : next_pow2(std::size_t(2 * K[std::size_t(i)] + 1));

    auto bins = detail::folded_bins(m, w, radial, K, g);
    std::vector<std::size_t> dims(g.begin(), g.begin() + m.dim);
    fft_nd_inplace(bins, dims, +1);

    GridFunction out;
    out.manifold = m;
    for (int i = 0; i < 3; ++i)
        out.manifold.grid[std::size_t(i)] = (i < m.dim) ? g[std::size_t(i)] : 1;
    for (int i = 0; i < m.dim; ++i)
        out.manifold.kmax[std::size_t(i)] =
            std::min(K[std::size_t(i)], int((g[std::size_t(i)] - 1) / 2));
    out.values.resize(bins.size());
    for (std::size_t i = 0; i < bins.size(); ++i) out.values[i] = {bins[i].re, bins[i].im};
    out.real_representing = (out.imag_defect() < 1e-12);
    return out;
}

inline GridFunction apply_spectral(const RegularizationProcess& p, const TestDistribution& w,
                                   double eps, std::array<std::size_t, 3> grid_override = {0, 0, 0}) {
    return apply_spectral(p, w, p.prepare(eps), p.band(eps), grid_override);
}

// kernel row K_eps(., x0): the regularized point mass at x0
inline GridFunction kernel_section(const RegularizationProcess& p, const Point& x0, double eps,
                                   std::array<std::size_t, 3> grid_override = {0, 0, 0}) {
    return apply_spectral(p, make_distribution("dirac", p.manifold, x0), eps, grid_override);
}

// mollifier convolution of Example-type: coefficient-wise F(eps sqrt(lambda_k))
inline GridFunction mollify(const RegularizationProcess& p, const TestDistribution& w,
                            double eps, std::array<std::size_t, 3> grid_override = {0, 0, 0}) {
    RegularizationProcess q = p;
    q.kind = ProcessKind::Mollifier;
    if (!q.fval) q.fval = std::make_shared<FilterValueTable>(q.filter);
    return apply_spectral(q, w, eps, grid_override);
}

// maximal distance from the base set among grid points carrying more than
// eta of the peak magnitude
inline double support_radius(const GridFunction& u,
                             const std::function<double(const Point&)>& base_distance,
                             double eta) {
    if (!(eta > 0.0 && eta < 1.0))
        throw std::invalid_argument("support_radius: eta must lie in (0,1)");
    const double mx = u.max_abs();
    if (mx == 0.0) throw std::invalid_argument("support_radius: zero field (degenerate input)");
    double radius = 0.0;
    for (std::size_t j = 0; j < u.values.size(); ++j)
        if (std::abs(u.values[j]) > eta * mx)
            radius = std::max(radius, base_distance(u.manifold.grid_point(j)));
    return radius;
}

// fraction of the squared mass within distance r of the base set
inline double mass_fraction_within(const GridFunction& u,
                                   const std::function<double(const Point&)>& base_distance,
                                   double r) {
    double inside = 0.0, total = 0.0;
    for (std::size_t j = 0; j < u.values.size(); ++j) {
        const double a2 = std::norm(u.values[j]);
        total += a2;
        if (base_distance(u.manifold.grid_point(j)) <= r) inside += a2;
    }
    return total == 0.0 ? 0.0 : inside / total;
}

}  // namespace wavereg
