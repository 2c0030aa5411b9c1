// harness.hpp — the verification battery.
//
// One verifier per axiom of the regularization process:
//   moderate_growth          every seminorm of T_eps w is O(eps^-N)
//   approximate_identity     <T_eps w, psi> -> <w, psi> for smooth psi
//   support_preservation     kernel/support radius <= supp(w) + 2c + grid
//                            tolerance, and mass does not flee the support
//   smooth_negligibility     T_eps u - u vanishes to all tested orders on
//                            smooth members
//   wavefront_preservation   estimated singular pairs match the declared
//                            wavefront data
//
// plus cutoff independence, isometry equivariance and Laplace commutation,
// Weyl counting asymptotics, the first-order operator battery, and the
// mollifier-equivalence check.  Contrast processes (heat kernel, sharp
// truncation) run the same battery and must fail support preservation —
// the axioms have teeth.
//
// Every verdict embeds the scans or residual tables it was decided on.

#pragma once

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wavereg/asymptotics.hpp"
#include "wavereg/distributions.hpp"
#include "wavereg/first_order.hpp"
#include "wavereg/microlocal.hpp"
#include "wavereg/multiplier.hpp"
#include "wavereg/regularizer.hpp"
#include "wavereg/wave.hpp"

namespace wavereg {

struct CheckResult {
    std::string id;
    bool pass = false;
    double wall_ms = 0.0;
    std::map<std::string, double> metrics;
    std::vector<std::string> notes;
    std::vector<EpsilonScan> scans;  // evidence backing the verdict
};

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const CheckResult* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

namespace detail {

class StopWatch {
  public:
    StopWatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace detail

// deterministic band-limited smooth test functions for pairings
inline std::vector<SpectralCoefficients> make_test_functions(const ManifoldModel& m, int count,
                                                             unsigned seed, int band = 8) {
    ManifoldModel mb = m;
    for (int i = 0; i < m.dim; ++i) {
        mb.kmax[std::size_t(i)] = band;
        mb.grid[std::size_t(i)] = next_pow2(std::size_t(2 * band + 1));
    }
    std::vector<SpectralCoefficients> out;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int f = 0; f < count; ++f) {
        SpectralCoefficients c(mb);
        for (std::size_t idx = 0; idx < c.c.size(); ++idx) {
            const auto k = c.mode_of(idx);
            std::array<int, 3> nk{-k[0], -k[1], -k[2]};
            const std::size_t cj = c.index(nk);
            if (cj < idx) continue;
            const std::complex<double> v{uni(rng), cj == idx ? 0.0 : uni(rng)};
            c.c[idx] = v;
            c.c[cj] = std::conj(v);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// |<T_eps w - w, psi>| through the residual multiplier (no cancellation of
// two O(1) pairings)
inline double pairing_residual(const RegularizationProcess& p, const TestDistribution& w,
                               const SpectralCoefficients& psi, double eps) {
    auto radial = p.prepare_minus_one(eps);
    const ManifoldModel& mb = psi.manifold;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t idx = 0; idx < psi.c.size(); ++idx) {
        const auto k = psi.mode_of(idx);
        std::array<int, 3> nk{-k[0], -k[1], -k[2]};
        acc += radial(std::sqrt(eigenvalue(mb, nk))) * w.coeff(nk) * psi.c[idx];
    }
    return std::abs(acc * w.manifold.volume());
}

// ---------------------------------------------------------------------------
// condition A: moderate growth
// ---------------------------------------------------------------------------
inline CheckResult check_moderate(const RegularizationProcess& p,
                                  const std::vector<TestDistribution>& zoo,
                                  const std::vector<double>& eps_grid) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "moderate_growth";
    res.pass = true;
    const auto seminorms = default_seminorms(p.manifold.dim);
    for (const auto& w : zoo) {
        auto scans = run_scan(p, w, seminorms, eps_grid);
        auto cls = classify_moderate(scans);
        res.pass = res.pass && cls.verdict;
        res.metrics["N_" + w.id] = cls.exponent;
        for (auto& sc : scans) res.scans.push_back(std::move(sc));
    }
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// condition B: approximate identity (decay asserted, rate reported)
// ---------------------------------------------------------------------------
inline CheckResult check_identity(const RegularizationProcess& p,
                                  const std::vector<TestDistribution>& zoo,
                                  const std::vector<double>& eps_grid, unsigned seed = 42) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "approximate_identity";
    res.pass = true;
    auto tests = make_test_functions(p.manifold, 5, seed);
    for (const auto& w : zoo) {
        for (std::size_t t = 0; t < tests.size(); ++t) {
            EpsilonScan sc;
            sc.process_id = to_string(p.kind);
            sc.distribution_id = w.id;
            sc.seminorm_id = "pairing_" + std::to_string(t);
            for (double eps : eps_grid) {
                sc.eps.push_back(eps);
                sc.values.push_back(pairing_residual(p, w, tests[t], eps));
            }
            // decay is the assertion; two decades suffice even for nets
            // converging only at a polynomial rate over a short grid
            const double v0 = sc.values.front();
            const double vend = sc.values.back();
            const bool decays = vend <= std::max(1e-10, 1e-2 * std::max(v0, 1e-300));
            res.pass = res.pass && decays;
            // rate reported, not required
            auto cls = classify_negligible({sc}, 0.0);
            res.metrics["rate_" + w.id + "_" + std::to_string(t)] =
                cls.per_seminorm[0].tail_slope;
            res.scans.push_back(std::move(sc));
        }
    }
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// condition C: preservation of supports
// ---------------------------------------------------------------------------
inline CheckResult check_support(const RegularizationProcess& p,
                                 const std::vector<TestDistribution>& zoo,
                                 const std::vector<double>& eps_grid, double eta = 1e-8) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "support_preservation";
    res.pass = true;

    // kernel reach of the process: 2c for the wave window, declared large
    // for the contrast processes (their kernels are not properly supported,
    // which is exactly what this check must expose)
    const double reach = p.kind == ProcessKind::WaveWindow ? 2.0 * p.cutoff.c
                       : p.kind == ProcessKind::Mollifier  ? p.filter.b  // F_hat-width heuristic, unused
                                                           : 2.0 * p.cutoff.c;

    for (const auto& w : zoo) {
        if (w.support_kind == SupportKind::Full) continue;  // nothing to pin down
        EpsilonScan sc;
        sc.process_id = to_string(p.kind);
        sc.distribution_id = w.id;
        sc.seminorm_id = "support_radius";
        double worst_excess = -1e300;
        double worst_nearmass = 1e300;
        for (double eps : eps_grid) {
            std::array<std::size_t, 3> g{1, 1, 1};
            for (int i = 0; i < p.manifold.dim; ++i)
                g[std::size_t(i)] = std::max<std::size_t>(2048, p.manifold.grid[std::size_t(i)]);
            if (p.manifold.dim >= 2) g = {0, 0, 0};  // torus: band-sized grid
            auto u = apply_spectral(p, w, eps, g);
            const double dx_sum = [&] {
                double s = 0.0;
                for (int i = 0; i < p.manifold.dim; ++i)
                    s = std::max(s, u.manifold.grid_step(i));
                return s;
            }();
            auto dist = [&](const Point& x) { return w.support_distance(x); };
            const double radius = support_radius(u, dist, eta);
            const double bound = reach + 3.0 * dx_sum;
            sc.eps.push_back(eps);
            sc.values.push_back(radius);
            worst_excess = std::max(worst_excess, radius - bound);
            // mass must not flee the support either
            worst_nearmass = std::min(worst_nearmass,
                                      mass_fraction_within(u, dist, reach + 3.0 * dx_sum));
        }
        res.metrics["worst_excess_" + w.id] = worst_excess;
        res.metrics["near_mass_" + w.id] = worst_nearmass;
        res.pass = res.pass && worst_excess <= 0.0 && worst_nearmass >= 0.5;
        res.scans.push_back(std::move(sc));
    }
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// condition D: negligibility on smooth members
// ---------------------------------------------------------------------------
inline CheckResult check_negligible(const RegularizationProcess& p,
                                    const std::vector<TestDistribution>& zoo,
                                    const std::vector<double>& eps_grid, double m_max = 8.0) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "smooth_negligibility";
    res.pass = true;
    const auto seminorms = default_seminorms(p.manifold.dim);
    for (const auto& w : zoo) {
        if (!w.smooth) continue;
        auto scans = run_residual_scan(
            p, w, seminorms, eps_grid, [&](double eps) { return p.prepare_minus_one(eps); },
            "-residual");
        auto cls = classify_negligible(scans, m_max);
        res.pass = res.pass && cls.verdict;
        res.metrics["tail_order_" + w.id] = cls.exponent;
        for (auto& sc : scans) res.scans.push_back(std::move(sc));
    }
    if (res.metrics.empty()) {
        res.pass = false;
        res.notes.push_back("no smooth member in the zoo selection");
    }
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// condition E: wavefront preservation
// ---------------------------------------------------------------------------
inline std::vector<ConeProbe> default_probes(const TestDistribution& w) {
    std::vector<ConeProbe> probes;
    const ManifoldModel& m = w.manifold;
    if (m.dim == 1) {
        for (double off : {0.0, 1.0, kPi}) {
            ConeProbe pr;
            pr.x0 = {w.anchor[0] + off, 0, 0};
            pr.window_radius = 0.3;
            pr.directions = circle_directions();
            probes.push_back(pr);
        }
    } else {
        for (double y : {0.0, 2.0}) {  // on the singular line (or its offset image)
            ConeProbe pr;
            pr.x0 = {w.anchor[0], y, 0};
            pr.window_radius = 0.8;
            pr.directions = torus_directions(16);
            probes.push_back(pr);
        }
        ConeProbe off;
        off.x0 = {w.anchor[0] + kPi, 1.0, 0};
        off.window_radius = 0.8;
        off.directions = torus_directions(16);
        probes.push_back(off);
    }
    return probes;
}

inline CheckResult check_wavefront(const RegularizationProcess& p,
                                   const std::vector<TestDistribution>& zoo,
                                   const std::vector<double>& eps_grid) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "wavefront_preservation";
    res.pass = true;
    for (const auto& w : zoo) {
        auto rep = estimate_wavefront(p, w, default_probes(w), eps_grid);
        const bool ok = rep.false_negatives == 0 && rep.false_positives_far == 0;
        res.pass = res.pass && ok;
        res.metrics["true_singular_" + w.id] = rep.true_singular;
        res.metrics["false_negatives_" + w.id] = rep.false_negatives;
        res.metrics["false_positives_far_" + w.id] = rep.false_positives_far;
        res.metrics["false_positives_near_" + w.id] = rep.false_positives_near;
    }
    res.notes.push_back("verdicts falsifiable only over the tested eps range");
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// full battery
// ---------------------------------------------------------------------------
struct BatteryOptions {
    std::vector<std::string> checks{"moderate_growth", "approximate_identity",
                                    "support_preservation", "smooth_negligibility",
                                    "wavefront_preservation"};
    unsigned seed = 42;

    bool wants(const std::string& id) const {
        for (const auto& c : checks)
            if (c == id) return true;
        return false;
    }
};

inline AxiomReport verify_axioms(const RegularizationProcess& p,
                                 const std::vector<TestDistribution>& zoo,
                                 const std::vector<double>& eps_grid,
                                 const BatteryOptions& opt = {}) {
    AxiomReport rep;
    if (opt.wants("moderate_growth")) rep.checks.push_back(check_moderate(p, zoo, eps_grid));
    if (opt.wants("approximate_identity"))
        rep.checks.push_back(check_identity(p, zoo, eps_grid, opt.seed));
    if (opt.wants("support_preservation")) rep.checks.push_back(check_support(p, zoo, eps_grid));
    if (opt.wants("smooth_negligibility"))
        rep.checks.push_back(check_negligible(p, zoo, eps_grid));
    if (opt.wants("wavefront_preservation"))
        rep.checks.push_back(check_wavefront(p, zoo, eps_grid));
    return rep;
}

// ---------------------------------------------------------------------------
// cutoff independence
// ---------------------------------------------------------------------------
inline CheckResult verify_cutoff_independence(const RegularizationProcess& p1,
                                              const RegularizationProcess& p2,
                                              const std::vector<TestDistribution>& zoo,
                                              const std::vector<double>& eps_grid,
                                              double m_max = 6.0) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "cutoff_independence";
    res.pass = true;
    CutoffDifferenceTable dpsi(p1.cutoff, p2.cutoff, p1.min_mode_spacing());
    const std::vector<std::string> seminorms =
        p1.manifold.dim == 1 ? std::vector<std::string>{"L2", "sup0"}
                             : std::vector<std::string>{"L2"};
    for (const auto& w : zoo) {
        auto scans = run_residual_scan(
            p1, w, seminorms, eps_grid,
            [&](double eps) { return prepare_cutoff_difference(dpsi, p1, p2, eps); }, "-cutdiff");
        auto cls = classify_negligible(scans, m_max);
        res.pass = res.pass && cls.verdict;
        res.metrics["tail_order_" + w.id] = cls.exponent;
        for (auto& sc : scans) res.scans.push_back(std::move(sc));
    }
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// isometry equivariance and Laplace commutation
// ---------------------------------------------------------------------------

// max grid residual of T_eps(shift w) - shift(T_eps w), the shift applied
// spectrally as the phase e^{-i <k, alpha>}
inline double isometry_residual(const RegularizationProcess& p, const TestDistribution& w,
                                const Point& alpha, double eps) {
    const ManifoldModel& m = p.manifold;
    auto radial = p.prepare(eps);
    const auto K = p.band(eps);

    ManifoldModel mb = m;
    for (int i = 0; i < m.dim; ++i) {
        mb.kmax[std::size_t(i)] = K[std::size_t(i)];
        mb.grid[std::size_t(i)] = next_pow2(std::size_t(2 * K[std::size_t(i)] + 1));
    }
    SpectralCoefficients diff(mb);
    for (std::size_t idx = 0; idx < diff.c.size(); ++idx) {
        const auto k = diff.mode_of(idx);
        double arg = 0.0;
        for (int i = 0; i < m.dim; ++i) arg -= m.freq(i, k[std::size_t(i)]) * alpha[std::size_t(i)];
        const std::complex<double> phase(std::cos(arg), std::sin(arg));
        const double mval = radial(std::sqrt(eigenvalue(mb, k)));
        const std::complex<double> cv = w.coeff(k);
        // apply shift then operator, and operator then shift
        diff.c[idx] = mval * (phase * cv) - phase * (mval * cv);
    }
    return inverse_transform(diff).max_abs();
}

// Coefficient residual of T_eps(Laplace w) - Laplace(T_eps w), measured
// relative to the coefficient scale of Laplace w.  The coefficients of
// Laplace w grow like lambda_k |w_hat_k|, so an absolute comparison would
// merely re-measure machine epsilon times the band edge squared.
inline double commutation_residual(const RegularizationProcess& p, const TestDistribution& w,
                                   double eps) {
    const ManifoldModel& m = p.manifold;
    auto radial = p.prepare(eps);
    const auto K = p.band(eps);
    ManifoldModel mb = m;
    for (int i = 0; i < m.dim; ++i) mb.kmax[std::size_t(i)] = K[std::size_t(i)];
    double worst = 0.0;
    SpectralCoefficients probe(mb);
    for (std::size_t idx = 0; idx < probe.c.size(); ++idx) {
        const auto k = probe.mode_of(idx);
        const double lam = eigenvalue(mb, k);
        const double mval = radial(std::sqrt(lam));
        const std::complex<double> cv = w.coeff(k);
        const double scale = 1.0 + lam * std::abs(cv);
        worst = std::max(worst, std::abs(mval * (lam * cv) - lam * (mval * cv)) / scale);
    }
    return worst;
}

inline CheckResult verify_isometry(const RegularizationProcess& p,
                                   const std::vector<TestDistribution>& zoo, const Point& alpha,
                                   const std::vector<double>& eps_grid) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "isometry_equivariance";
    res.pass = true;
    for (const auto& w : zoo) {
        double worst_iso = 0.0, worst_comm = 0.0;
        for (double eps : eps_grid) {
            worst_iso = std::max(worst_iso, isometry_residual(p, w, alpha, eps));
            worst_comm = std::max(worst_comm, commutation_residual(p, w, eps));
        }
        res.metrics["isometry_" + w.id] = worst_iso;
        res.metrics["commutation_" + w.id] = worst_comm;
        res.pass = res.pass && worst_iso < 1e-12 && worst_comm < 1e-12;
    }
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// Weyl counting asymptotics
// ---------------------------------------------------------------------------
inline double weyl_constant(const ManifoldModel& m) {
    const double md = double(m.dim);
    return m.volume() / (std::pow(4.0 * kPi, md / 2.0) * std::tgamma(md / 2.0 + 1.0));
}

inline CheckResult verify_weyl(const ManifoldModel& m, double lambda_max, double tolerance) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = std::string("weyl_counting_dim") + std::to_string(m.dim);
    const double C = weyl_constant(m);

    EpsilonScan table;  // reused shape: x = lambda checkpoint, value = ratio
    table.process_id = "counting";
    table.seminorm_id = "ratio";
    double final_ratio = 0.0;
    bool band_ok = true;
    for (double lam = 100.0; lam <= lambda_max * 1.0000001; lam *= std::sqrt(10.0)) {
        const double n = double(counting_function(m, lam));
        const double ratio = n / (C * std::pow(lam, double(m.dim) / 2.0));
        table.eps.push_back(1.0 / lam);  // monotone axis for the scan container
        table.values.push_back(ratio);
        final_ratio = ratio;
        // lattice-count fluctuation band
        const double band = m.dim == 1 ? 1.5 / std::sqrt(lam) : std::pow(lam, -0.25);
        if (std::abs(ratio - 1.0) > band + 1e-9) band_ok = false;
    }
    res.metrics["final_ratio"] = final_ratio;
    res.metrics["weyl_constant"] = C;
    res.pass = std::abs(final_ratio - 1.0) <= tolerance && band_ok;
    res.notes.push_back("lambda = 0 checkpoint excluded (ratio undefined)");
    res.scans.push_back(std::move(table));
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// first-order operator battery (A, B, D + support + flow)
// ---------------------------------------------------------------------------
inline AxiomReport verify_first_order(const ManifoldModel& m, const FilterSpec& f,
                                      const std::vector<TestDistribution>& zoo,
                                      const std::vector<double>& eps_grid, unsigned seed = 42) {
    AxiomReport rep;

    // F(eps D) on the circle: F even makes the signed-spectrum calculus
    // coincide with the bare mollifier of the Laplacian; the batteries run
    // through that process
    auto p = RegularizationProcess::mollifier(m, f, eps_grid.back());

    rep.checks.push_back(check_moderate(p, zoo, eps_grid));
    rep.checks.back().id = "first_order_moderate";
    rep.checks.push_back(check_identity(p, zoo, eps_grid, seed));
    rep.checks.back().id = "first_order_identity";
    rep.checks.push_back(check_negligible(p, zoo, eps_grid));
    rep.checks.back().id = "first_order_negligible";

    // translation flow: e^{isD} shifts the point mass
    {
        detail::StopWatch sw;
        CheckResult res;
        res.id = "first_order_flow";
        double worst = 0.0;
        for (double s : {0.3, 1.0, kPi / 3.0})
            worst = std::max(worst, translation_flow_residual(m, 0.7, s, 64));
        res.metrics["translation_residual"] = worst;
        res.pass = worst < 1e-12;
        res.wall_ms = sw.ms();
        rep.checks.push_back(std::move(res));
    }

    // compact-transform support bound: kernel radius <= eps * c + 3 dx
    {
        detail::StopWatch sw;
        CheckResult res;
        res.id = "first_order_support";
        res.pass = true;
        const double c_tilde = 0.75;
        CompactTransformFilter fc(c_tilde);
        const std::size_t n = 2048;
        const double dx = m.lengths[0] / double(n);
        auto base = [&](const Point& x) { return geodesic_distance(m, x, {0, 0, 0}); };
        double worst_excess = -1e300;
        for (double eps : {1.0, 0.5, 0.25, 0.125}) {
            auto ker = compact_filter_kernel(m, fc, eps, n);
            const double radius = support_radius(ker, base, 1e-8);
            worst_excess = std::max(worst_excess, radius - (eps * c_tilde + 3.0 * dx));
        }
        res.metrics["worst_excess"] = worst_excess;
        res.metrics["c_tilde"] = c_tilde;
        res.pass = worst_excess <= 0.0;
        res.wall_ms = sw.ms();
        rep.checks.push_back(std::move(res));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// mollifier equivalence
// ---------------------------------------------------------------------------
inline CheckResult verify_mollifier_equivalence(const RegularizationProcess& p,
                                                const TestDistribution& w,
                                                const std::vector<double>& eps_grid,
                                                double m_max = 6.0) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "mollifier_equivalence";

    // route one: spectral convolution with rho (rho_hat = F(|.|)), i.e.
    // coefficient-wise F(eps sqrt(lambda)); route two: the cutoff-free
    // process applied through the generic machinery
    double coeff_worst = 0.0;
    RegularizationProcess bare = p;
    bare.kind = ProcessKind::Mollifier;
    for (double eps : {eps_grid.front(), eps_grid[eps_grid.size() / 2], eps_grid.back()}) {
        auto via_process = apply_spectral_coeffs(bare, w, eps);
        const auto K = bare.band(eps);
        ManifoldModel mb = via_process.manifold;
        for (std::size_t idx = 0; idx < via_process.c.size(); ++idx) {
            const auto k = via_process.mode_of(idx);
            const std::complex<double> direct =
                (*p.fval)(eps * std::sqrt(eigenvalue(mb, k))) * w.coeff(k);
            coeff_worst = std::max(coeff_worst, std::abs(direct - via_process.c[idx]));
        }
        (void)K;
    }
    res.metrics["coefficient_residual"] = coeff_worst;

    // the deviation of the full wave-window operator from the mollifier is
    // negligible-class
    const std::vector<std::string> seminorms{"L2"};
    auto scans = run_residual_scan(
        p, w, seminorms, eps_grid, [&](double eps) { return p.prepare_minus_bare(eps); },
        "-vs-mollifier");
    auto cls = classify_negligible(scans, m_max);
    res.metrics["tail_order"] = cls.exponent;
    res.pass = coeff_worst < 1e-12 && cls.verdict;
    for (auto& sc : scans) res.scans.push_back(std::move(sc));
    res.wall_ms = sw.ms();
    return res;
}

// ---------------------------------------------------------------------------
// contrast separation: the flagship passes everything, the contrast
// processes fail support preservation
// ---------------------------------------------------------------------------
inline CheckResult verify_contrast_separation(const RegularizationProcess& flagship,
                                              const std::vector<TestDistribution>& zoo,
                                              const std::vector<double>& eps_grid) {
    detail::StopWatch sw;
    CheckResult res;
    res.id = "contrast_separation";

    auto heat = RegularizationProcess::heat_contrast(flagship.manifold, eps_grid.back());
    auto sharp = RegularizationProcess::sharp_contrast(flagship.manifold, eps_grid.back());
    heat.cutoff = flagship.cutoff;   // the support bound both must fail
    sharp.cutoff = flagship.cutoff;

    auto flag_support = check_support(flagship, zoo, eps_grid);
    auto heat_support = check_support(heat, zoo, eps_grid);
    auto sharp_support = check_support(sharp, zoo, eps_grid);

    // contrast processes still satisfy growth and identity
    auto heat_mod = check_moderate(heat, zoo, eps_grid);
    auto sharp_mod = check_moderate(sharp, zoo, eps_grid);
    auto heat_id = check_identity(heat, zoo, eps_grid);
    auto sharp_id = check_identity(sharp, zoo, eps_grid);

    res.metrics["flagship_support_pass"] = flag_support.pass ? 1.0 : 0.0;
    res.metrics["heat_support_pass"] = heat_support.pass ? 1.0 : 0.0;
    res.metrics["sharp_support_pass"] = sharp_support.pass ? 1.0 : 0.0;
    res.metrics["heat_moderate_pass"] = heat_mod.pass ? 1.0 : 0.0;
    res.metrics["sharp_moderate_pass"] = sharp_mod.pass ? 1.0 : 0.0;
    res.metrics["heat_identity_pass"] = heat_id.pass ? 1.0 : 0.0;
    res.metrics["sharp_identity_pass"] = sharp_id.pass ? 1.0 : 0.0;

    res.pass = flag_support.pass && !heat_support.pass && !sharp_support.pass &&
               heat_mod.pass && sharp_mod.pass && heat_id.pass && sharp_id.pass;
    for (auto& sc : heat_support.scans) res.scans.push_back(std::move(sc));
    for (auto& sc : sharp_support.scans) res.scans.push_back(std::move(sc));
    res.wall_ms = sw.ms();
    return res;
}

}  // namespace wavereg
