// scratch calibration harness (not part of the deliverable)
#include <chrono>
#include <cstdio>

#include "wavereg/regularizer.hpp"
#include "wavereg/wave.hpp"

using namespace wavereg;

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto tick = [&](const char* tag) {
        auto t1 = std::chrono::steady_clock::now();
        std::printf("[%8.2f ms] %s\n",
                    std::chrono::duration<double, std::milli>(t1 - t0).count(), tag);
        t0 = t1;
    };

    FilterSpec f(1.0, 2.0);

    // --- psi table shapes ---
    for (double c : {0.5, 1.0}) {
        CutoffKernelTable psi(CutoffSpec(c), 1.0);
        std::printf("c=%.2f: psi(0)=%.6f h=%.4f nodes=%zu halfwidth=%.1f mass_defect=%.3e\n",
                    c, psi.node_value(0), psi.step(), psi.nodes(), psi.half_width(),
                    psi.mass_defect());
        for (double thr : {1e-8, 1e-10, 1e-13}) {
            std::printf("   tail_width(%.0e) = %.1f\n", thr, psi.tail_width(thr));
        }
    }
    tick("psi tables");

    // --- two-path agreement ---
    auto m = ManifoldModel::circle(8, 64);
    auto P = RegularizationProcess::wave_window(m, f, CutoffSpec(0.5), 1.0 / 4096.0);
    tick("process build (eps_min 2^-12)");
    for (double eps : {1.0 / 16, 1.0 / 256, 1.0 / 4096}) {
        double worst = 0.0, worst_lam = 0.0;
        for (double lam : {0.0, 1.0, 2.0, 5.0, 10.0, 0.5 / eps, 1.0 / eps, 1.5 / eps, 2.0 / eps,
                           2.0 / eps + 100.0}) {
            const double a = P.multiplier(lam, eps);
            const double b = P.multiplier_time_quadrature(lam, eps);
            const double d = std::abs(a - b);
            if (d > worst) { worst = d; worst_lam = lam; }
        }
        std::printf("eps=2^%.0f: worst |conv - squad| = %.3e at lambda=%.1f;  m(0)=%.15f  m-1(0)=%.3e\n",
                    std::log2(eps), worst, worst_lam, P.multiplier(0.0, eps),
                    P.multiplier_minus_one(0.0, eps));
    }
    tick("two-path agreement");

    // --- residual scan magnitudes (criterion 4/5-type): m-1 at modest lambda ---
    std::printf("\nminus_one at lambda=8 (smooth-bump top mode):\n");
    for (int j = 4; j <= 12; ++j) {
        const double eps = std::pow(2.0, -j);
        std::printf("  eps=2^-%d: m-1 = %.6e\n", j, P.multiplier_minus_one(8.0, eps));
    }
    tick("minus_one scan");

    // --- cutoff difference magnitudes (criterion 6) ---
    auto P2 = RegularizationProcess::wave_window(m, f, CutoffSpec(1.0), 1.0 / 4096.0);
    tick("second process build");
    std::printf("\ncutoff difference m1-m2 at lambda=0 and lambda=1/(2eps):\n");
    CutoffDifferenceTable dpsi(P.cutoff, P2.cutoff, P.min_mode_spacing());
    for (int j = 4; j <= 12; ++j) {
        const double eps = std::pow(2.0, -j);
        auto d = prepare_cutoff_difference(dpsi, P, P2, eps);
        double mx = 0.0;
        for (double lam = 0.0; lam <= d.lambda_max(); lam += 1.0) mx = std::max(mx, std::abs(d(lam)));
        std::printf("  eps=2^-%d: |d(0)|=%.3e  max|d|=%.3e\n", j, std::abs(d(0.0)), mx);
    }
    tick("cutoff difference scan");

    // --- minus-bare (mollifier deviation) ---
    std::printf("\nminus_bare max over lambda (criterion 12):\n");
    for (int j = 4; j <= 12; j += 2) {
        const double eps = std::pow(2.0, -j);
        auto d = P.prepare_minus_bare(eps);
        double mx = 0.0;
        for (double lam = 0.0; lam <= d.lambda_max(); lam += 1.0) mx = std::max(mx, std::abs(d(lam)));
        std::printf("  eps=2^-%d: max|m - F(eps lam)| = %.3e\n", j, mx);
    }
    tick("minus_bare scan");

    // --- kernel + support radius at n=2048 ---
    std::printf("\nkernel support (c=0.5, n=2048, eta=1e-8): bound 2c+3dx = %.6f\n",
                1.0 + 3.0 * kTwoPi / 2048.0);
    auto base = [&](const Point& x) { return geodesic_distance(P.manifold, x, {0, 0, 0}); };
    for (int j = 4; j <= 12; ++j) {
        const double eps = std::pow(2.0, -j);
        auto ker = kernel_section(P, {0, 0, 0}, eps, {2048, 1, 1});
        const double rad = support_radius(ker, base, 1e-8);
        // relative mass outside 2c + 3dx
        double inside = mass_fraction_within(ker, base, 1.0 + 3.0 * kTwoPi / 2048.0);
        std::printf("  eps=2^-%d: radius=%.4f mass_outside=%.3e  peak=%.3f\n", j, rad,
                    1.0 - inside, ker.max_abs());
    }
    tick("kernel support scan");

    // --- wave snapshot leakage ---
    {
        const std::size_t n = 2048;
        auto mm = ManifoldModel::circle(4, n);
        const double dx = kTwoPi / double(n);
        auto u0 = compact_bump_samples(mm, 0.0, 0.02, 0.05, n);
        LeapfrogWave solver(u0, dx, 0.5 * dx);
        while (solver.time() < 1.0 - 1e-12) solver.step();
        std::printf("\nwave snapshot t=%.4f: mass outside B(1.05 + 3dx) = %.3e, outside B(1+3dx) = %.3e\n",
                    solver.time(), snapshot_mass_outside(mm, solver.state(), 0.0, 1.05 + 3 * dx),
                    snapshot_mass_outside(mm, solver.state(), 0.0, 1.0 + 3 * dx));
        // also: band-limited dirac initial data, measure initial radius
        auto w = make_distribution("dirac", mm);
        auto ud = wave_initial_samples(w, n, int(n) / 4);
        double mx = 0.0;
        for (double v : ud) mx = std::max(mx, std::abs(v));
        double rho0 = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(ud[j]) > 1e-8 * mx) {
                double d = std::min(double(j) * dx, kTwoPi - double(j) * dx);
                rho0 = std::max(rho0, d);
            }
        LeapfrogWave sd(ud, dx, 0.5 * dx);
        while (sd.time() < 1.0 - 1e-12) sd.step();
        std::printf("dirac-envelope rho0=%.4f (=%.1f dx); mass outside B(1+rho0+3dx)=%.3e, B(1+3dx)=%.3e\n",
                    rho0, rho0 / dx, snapshot_mass_outside(mm, sd.state(), 0.0, 1.0 + rho0 + 3 * dx),
                    snapshot_mass_outside(mm, sd.state(), 0.0, 1.0 + 3 * dx));
    }
    tick("wave snapshots");

    // --- apply_spectral timing at the deep end ---
    {
        auto w = make_distribution("dirac", P.manifold);
        auto t2 = std::chrono::steady_clock::now();
        auto u = apply_spectral(P, w, 1.0 / 4096.0);
        auto t3 = std::chrono::steady_clock::now();
        std::printf("\napply_spectral(dirac, 2^-12): grid=%zu sup=%.3f  [%.1f ms]\n",
                    u.values.size(), u.max_abs(),
                    std::chrono::duration<double, std::milli>(t3 - t2).count());
    }
    tick("deep apply");
    return 0;
}
