// multiplier.hpp — effective spectral multipliers of the regularization
// operators.
//
// The operator acts mode-wise as multiplication by
//
//   m_eps(lambda) = (1/2pi) integral phi_c(s) (F_eps)^hat(s) cos(s lambda) ds
//                 = (psi_c * F_eps)(lambda),     psi_c = IFT(phi_c),
//
// so the production path tabulates psi_c once (it is band-limited to
// [-2c, 2c] and decays super-polynomially) and evaluates the lambda-space
// convolution against the closed-form filter.  The defining s-integral is
// kept as an independent quadrature path for cross-checks.
//
// Because phi_c is 1 near 0, every moment of psi_c above order zero
// vanishes; m_eps - 1, the multiplier difference of two cutoffs, and
// m_eps - F(eps*lambda) are all super-polynomially small where the filter
// plateau covers the integration window.  Those differences are what the
// negligibility scans measure, so they get dedicated evaluators that never
// subtract two O(1) quantities: residuals come out with ~1e-15 noise
// floors instead of ~1e-12.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wavereg/filter.hpp"
#include "wavereg/manifold.hpp"

namespace wavereg {

// psi_c(mu) = (1/pi) integral_0^{2c} phi_c(s) cos(s mu) ds, tabulated on a
// fine uniform half-grid (psi is even).  The grid extends until the values
// stay below a relative threshold, which also yields the tail-mass
// estimates that size spectral band limits.
//
// Convolutions against the filter read the table with a stride.  The
// effective step must beat the Nyquist limit of psi (band 2c) *and* keep
// the alias images of F(eps .)^hat, which sit at 2*pi/h / eps, in the
// far-decayed tail of F_hat; the second constraint bites at large eps, so
// the admissible step is eps-dependent (see conv_stride).
class CutoffKernelTable {
  public:
    CutoffKernelTable() = default;

    explicit CutoffKernelTable(const CutoffSpec& phi, double step_hint = 1.0,
                               double rel_tail_threshold = 1e-14)
        : c_(phi.c),
          base_step_(std::min(step_hint, kPi / (4.0 * phi.c))),
          h_(std::min(base_step_, 0.15)) {
        build(phi, rel_tail_threshold);
    }

    double c() const { return c_; }
    double step() const { return h_; }
    double base_step() const { return base_step_; }
    std::size_t nodes() const { return val_.size(); }
    double node_value(std::size_t i) const { return val_[i]; }
    double half_width() const { return h_ * double(val_.size() - 1); }

    // h_eff * (psi(0) + 2 sum_strided psi) - 1: quadrature + truncation
    // defect of the unit mass at the given stride, compensated.
    double mass_defect(std::size_t stride = 1) const {
        return stride <= defect_.size() ? defect_[stride - 1] : compute_defect(stride);
    }

    // one-sided absolute tail mass h * sum_{mu_i >= w} |psi(mu_i)|
    double tail_mass(double w) const {
        std::size_t i = std::size_t(std::max(0.0, std::ceil(w / h_)));
        if (i >= tail_.size()) return 0.0;
        return tail_[i];
    }

    // smallest half-width W with tail_mass(W) < threshold
    double tail_width(double threshold) const {
        for (std::size_t i = 0; i < tail_.size(); ++i)
            if (tail_[i] < threshold) return double(i) * h_;
        return half_width();
    }

  private:
    void build(const CutoffSpec& phi, double rel_tail) {
        // node quadrature: trapezoid over [0, 2c]; the integrand extends
        // evenly and vanishes to all orders at 2c, so this is alias-exact
        // at the scales used
        const std::size_t nq = 4096;
        const double ds = 2.0 * c_ / double(nq);
        std::vector<double> phv(nq + 1);
        for (std::size_t j = 0; j <= nq; ++j) phv[j] = phi(double(j) * ds);

        auto psi_at = [&](double mu) {
            double acc = 0.5 * phv[0];
            for (std::size_t j = 1; j < nq; ++j) acc += phv[j] * std::cos(double(j) * ds * mu);
            return acc * ds / kPi;
        };

        const double scale = std::abs(psi_at(0.0));
        const std::size_t run_needed = std::size_t(std::ceil(64.0 / h_));
        std::size_t quiet = 0;
        const std::size_t hard_cap = 1 << 20;
        for (std::size_t i = 0; i < hard_cap; ++i) {
            const double v = psi_at(double(i) * h_);
            val_.push_back(v);
            quiet = (std::abs(v) < rel_tail * scale) ? quiet + 1 : 0;
            if (quiet >= run_needed) break;
        }

        tail_.assign(val_.size(), 0.0);
        double acc = 0.0;
        for (std::size_t i = val_.size(); i-- > 0;) {
            acc += std::abs(val_[i]);
            tail_[i] = acc * h_;
        }

        defect_.resize(64);
        for (std::size_t s = 1; s <= defect_.size(); ++s) defect_[s - 1] = compute_defect(s);
    }

    double compute_defect(std::size_t stride) const {
        double s = val_[0], comp = 0.0;
        for (std::size_t i = stride; i < val_.size(); i += stride) {
            const double term = 2.0 * val_[i];
            const double y = term - comp;
            const double t = s + y;
            comp = (t - s) - y;
            s = t;
        }
        return s * h_ * double(stride) - 1.0;
    }

    double c_ = 0.0;
    double base_step_ = 1.0;
    double h_ = 1.0;
    std::vector<double> val_;
    std::vector<double> tail_;
    std::vector<double> defect_;
};

// largest table stride whose effective step keeps both the psi Nyquist
// limit and the filter alias images below ~1e-13 at this eps
inline std::size_t conv_stride(const CutoffKernelTable& psi, double eps) {
    const double z = std::log(3e13 / eps);  // F_hat envelope ~ 3 exp(-sqrt(2x))
    const double alias_cap = kTwoPi / (2.0 * psi.c() + eps * 0.5 * z * z);
    const double h_allowed = std::min(psi.base_step(), alias_cap);
    return std::max<std::size_t>(1, std::size_t(h_allowed / psi.step()));
}

// psi_{c1} - psi_{c2} on a common grid; its total mass is exactly zero in
// the continuum, so convolving it against the filter measures the cutoff
// dependence directly.
class CutoffDifferenceTable {
  public:
    CutoffDifferenceTable(const CutoffSpec& phi1, const CutoffSpec& phi2, double step_hint = 1.0)
        : t1_(phi1, std::min(step_hint, kPi / (4.0 * std::max(phi1.c, phi2.c)))),
          t2_(phi2, t1_.base_step()),
          c_(std::max(phi1.c, phi2.c)) {
        if (t1_.step() != t2_.step())
            throw std::logic_error("CutoffDifferenceTable: step mismatch");
    }

    double c() const { return c_; }
    double step() const { return t1_.step(); }
    double base_step() const { return t1_.base_step(); }
    std::size_t nodes() const { return std::max(t1_.nodes(), t2_.nodes()); }
    double node_value(std::size_t i) const {
        const double a = i < t1_.nodes() ? t1_.node_value(i) : 0.0;
        const double b = i < t2_.nodes() ? t2_.node_value(i) : 0.0;
        return a - b;
    }
    double mass_defect(std::size_t stride = 1) const {
        return t1_.mass_defect(stride) - t2_.mass_defect(stride);
    }
    double half_width() const { return step() * double(nodes() - 1); }

  private:
    CutoffKernelTable t1_, t2_;
    double c_ = 0.0;
};

inline std::size_t conv_stride(const CutoffDifferenceTable& dpsi, double eps) {
    const double z = std::log(3e13 / eps);
    const double alias_cap = kTwoPi / (2.0 * dpsi.c() + eps * 0.5 * z * z);
    const double h_allowed = std::min(dpsi.base_step(), alias_cap);
    return std::max<std::size_t>(1, std::size_t(h_allowed / dpsi.step()));
}

namespace detail {

// shared strided convolution loop: h_eff * sum_i psi_i * g(eps*(lambda - mu_i))
template <class Table, class G>
double psi_convolve(const Table& psi, double lambda, double eps, std::size_t stride, G&& g) {
    const double h = psi.step();
    double acc = psi.node_value(0) * g(eps * lambda);
    double comp = 0.0;
    for (std::size_t i = stride; i < psi.nodes(); i += stride) {
        const double mu = double(i) * h;
        const double term =
            psi.node_value(i) * (g(eps * (lambda - mu)) + g(eps * (lambda + mu)));
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc * h * double(stride);
}

}  // namespace detail

// m_eps(lambda) by the lambda-convolution (production) path.
inline double conv_multiplier(const CutoffKernelTable& psi, const FilterValueTable& f,
                              double lambda, double eps) {
    return detail::psi_convolve(psi, lambda, eps, conv_stride(psi, eps),
                                [&](double x) { return f(x); });
}

// m_eps(lambda) - 1 without forming m first: h sum psi (F - 1) + mass defect.
inline double conv_multiplier_minus_one(const CutoffKernelTable& psi, const FilterValueTable& f,
                                        double lambda, double eps) {
    const std::size_t s = conv_stride(psi, eps);
    return detail::psi_convolve(psi, lambda, eps, s, [&](double x) { return f(x) - 1.0; }) +
           psi.mass_defect(s);
}

// m_eps(lambda) - F(eps lambda): the deviation from the bare mollifier.
inline double conv_multiplier_minus_bare(const CutoffKernelTable& psi, const FilterValueTable& f,
                                         double lambda, double eps) {
    const double base = f(eps * lambda);
    const std::size_t s = conv_stride(psi, eps);
    return detail::psi_convolve(psi, lambda, eps, s, [&](double x) { return f(x) - base; }) +
           psi.mass_defect(s) * base;
}

// Multiplier difference of two cutoffs sharing one filter.  The quadrature
// mass defect of psi1 - psi2 would otherwise bias every mode coherently at
// ~1e-15 and accumulate in sup norms; centring on the local filter value
// removes it.
inline double conv_multiplier_difference(const CutoffDifferenceTable& dpsi,
                                         const FilterValueTable& f, double lambda, double eps) {
    // integral of (psi1 - psi2) vanishes, so subtracting the local filter
    // value changes nothing in the continuum but cancels the table defect
    const std::size_t s = conv_stride(dpsi, eps);
    const double base = f(eps * lambda);
    return detail::psi_convolve(dpsi, lambda, eps, s, [&](double x) { return f(x) - base; });
}

// Independent cross-check: the defining time integral, folded to s >= 0 and
// substituted s = eps r so the quadrature nodes are exactly the F_hat table
// nodes:  m = (dr/pi) * [ phi(0) F_hat(0)/2 + sum phi(eps r_i) F_hat(r_i)
// cos(eps r_i lambda) ].
inline double squad_multiplier(const CutoffSpec& phi, const FilterFourierTable& fhat,
                               double lambda, double eps) {
    const double dr = fhat.dr();
    const double smax = 2.0 * phi.c;
    if (eps * dr > kPi * eps / (10.0 * fhat.filter().b) + 1e-15 && dr > kPi / (10.0 * fhat.filter().b))
        throw std::runtime_error("squad_multiplier: quadrature step too coarse");
    double acc = 0.5 * phi(0.0) * fhat.at_zero();
    double comp = 0.0;
    for (std::size_t i = 1; double(i) * dr * eps <= smax; ++i) {
        const double r = double(i) * dr;
        if (r > fhat.r_max()) break;
        const double term = phi(eps * r) * fhat.node_value(i) * std::cos(eps * r * lambda);
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc * dr / kPi;
}

// Uniform lambda-table of a multiplier with 6-point interpolation, for
// torus lattices where sqrt(lambda_k) is irrational, and for CSV export.
class MultiplierTable {
  public:
    enum class Path { LambdaConvolution, TimeQuadrature };

    MultiplierTable() = default;
    template <class Eval>
    MultiplierTable(double eps, double lambda_max, double step, Path path, Eval&& eval)
        : eps_(eps), step_(step), path_(path), val_(std::size_t(lambda_max / step) + 8) {
        for (std::size_t i = 0; i < val_.size(); ++i) val_[i] = eval(double(i) * step);
    }

    double eps() const { return eps_; }
    double step() const { return step_; }
    double lambda_max() const { return step_ * double(val_.size() - 1); }
    Path path() const { return path_; }
    std::size_t nodes() const { return val_.size(); }
    double node_value(std::size_t i) const { return val_[i]; }

    double operator()(double lambda) const {
        const double y = std::abs(lambda);
        if (y >= lambda_max()) return 0.0;
        return detail::interp6(val_, step_, y);
    }

  private:
    double eps_ = 0.0;
    double step_ = 1.0;
    Path path_ = Path::LambdaConvolution;
    std::vector<double> val_;
};

}  // namespace wavereg
