// scratch calibration: scans, slopes, microlocal (not part of the deliverable)
#include <chrono>
#include <cstdio>

#include "wavereg/asymptotics.hpp"
#include "wavereg/microlocal.hpp"
#include "wavereg/wave.hpp"

using namespace wavereg;

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto tick = [&](const char* tag) {
        auto t1 = std::chrono::steady_clock::now();
        std::printf("[%8.0f ms] %s\n",
                    std::chrono::duration<double, std::milli>(t1 - t0).count(), tag);
        t0 = t1;
    };

    FilterSpec f(1.0, 2.0);
    auto m = ManifoldModel::circle(8, 64);
    auto P = RegularizationProcess::wave_window(m, f, CutoffSpec(0.5), 1.0 / 4096.0);
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);  // 2^-4 .. 2^-12

    // criterion 3: moderateness ladder on dirac
    {
        auto w = make_distribution("dirac", m);
        auto scans = run_scan(P, w, {"L2", "sup0", "sup1", "sup2", "sup3", "sup4", "H1", "H2"}, grid);
        for (const auto& sc : scans) {
            auto fit = fit_slope(sc);
            std::printf("dirac %-5s slope=%+.4f R2=%.6f  v[0]=%.3e v[last]=%.3e\n",
                        sc.seminorm_id.c_str(), fit.slope, fit.r_squared, sc.values.front(),
                        sc.values.back());
        }
        tick("dirac ladder");
    }

    // sawtooth sobolev ladder: s0 = 1/2; H1-slope should be ~ -(1-0.5) = -0.5, L2 ~ 0
    {
        auto w = make_distribution("sawtooth_jump", m);
        auto scans = run_scan(P, w, {"L2", "H1", "H2", "sup0"}, grid);
        for (const auto& sc : scans) {
            auto fit = fit_slope(sc);
            std::printf("saw   %-4s slope=%+.4f R2=%.6f\n", sc.seminorm_id.c_str(), fit.slope,
                        fit.r_squared);
        }
        tick("sawtooth ladder");
    }

    // criterion 4: negligibility of T_eps u - u on smooth_bump
    {
        auto w = make_distribution("smooth_bump", m);
        auto scans = run_residual_scan(
            P, w, {"L2", "H1", "H2", "sup0", "sup2"}, grid,
            [&](double eps) { return P.prepare_minus_one(eps); }, "-residual");
        for (const auto& sc : scans) {
            std::printf("bump resid %-4s:", sc.seminorm_id.c_str());
            for (double v : sc.values) std::printf(" %.1e", v);
            std::printf("\n");
        }
        auto cls = classify_negligible(scans, 8.0);
        std::printf("negligible(m_max=8): verdict=%d\n", int(cls.verdict));
        for (auto& v : cls.per_seminorm)
            std::printf("   %-4s ok=%d reason=%s tail=%.2f full=%.2f usable=%zu\n",
                        v.seminorm_id.c_str(), int(v.ok), v.reason.c_str(), v.tail_slope,
                        v.full_slope, v.usable);
        tick("bump negligibility");
    }

    // criterion 6: cutoff independence on dirac and sawtooth
    {
        auto P2 = RegularizationProcess::wave_window(m, f, CutoffSpec(1.0), 1.0 / 4096.0);
        CutoffDifferenceTable dpsi(P.cutoff, P2.cutoff, P.min_mode_spacing());
        for (const char* id : {"dirac", "sawtooth_jump"}) {
            auto w = make_distribution(id, m);
            auto scans = run_residual_scan(
                P, w, {"L2", "sup0"}, grid,
                [&](double eps) { return prepare_cutoff_difference(dpsi, P, P2, eps); }, "-diff");
            auto cls = classify_negligible(scans, 6.0);
            std::printf("cutoff-diff %s: verdict=%d\n", id, int(cls.verdict));
            for (auto& v : cls.per_seminorm)
                std::printf("   %-4s ok=%d reason=%s tail=%.2f full=%.2f usable=%zu\n",
                            v.seminorm_id.c_str(), int(v.ok), v.reason.c_str(), v.tail_slope,
                            v.full_slope, v.usable);
            for (auto& sc : scans) {
                std::printf("   %-4s:", sc.seminorm_id.c_str());
                for (double v : sc.values) std::printf(" %.1e", v);
                std::printf("\n");
            }
        }
        tick("cutoff independence");
    }

    // criterion 5: pairing decay  <T_eps delta, psi> - psi(x0)
    {
        auto w = make_distribution("dirac", m);
        // psi = band-limited test function: coefficients on the 64-grid manifold
        ManifoldModel mt = ManifoldModel::circle(8, 64);
        SpectralCoefficients psi(mt);
        psi.at({0, 0, 0}) = 0.7;
        psi.at({1, 0, 0}) = 0.3;
        psi.at({-1, 0, 0}) = 0.3;
        psi.at({3, 0, 0}) = std::complex<double>(0.1, -0.05);
        psi.at({-3, 0, 0}) = std::complex<double>(0.1, 0.05);
        const double psi_x0 = 0.7 + 0.6 + 0.2;  // at theta=0
        EpsilonScan sc;
        sc.seminorm_id = "pairing";
        for (double eps : grid) {
            auto radial = P.prepare_minus_one(eps);  // <T w - w, psi> via residual multiplier
            std::complex<double> acc{0, 0};
            for (int k = -8; k <= 8; ++k) {
                acc += radial(std::abs(double(k))) * w.coeff({k, 0, 0}) *
                       psi.at({-k, 0, 0});
            }
            acc *= m.volume();
            sc.eps.push_back(eps);
            sc.values.push_back(std::abs(acc));
        }
        (void)psi_x0;
        std::printf("pairing residual:");
        for (double v : sc.values) std::printf(" %.1e", v);
        std::printf("\n");
        auto cls = classify_negligible({sc}, 6.0);
        std::printf("pairing negligible(6): verdict=%d tail=%.2f\n", int(cls.verdict),
                    cls.per_seminorm[0].tail_slope);
        tick("pairing decay");
    }

    // microlocal: dirac, sawtooth, smooth_bump on S1
    {
        for (const char* id : {"dirac", "sawtooth_jump", "smooth_bump"}) {
            auto w = make_distribution(id, m);
            std::vector<ConeProbe> probes;
            for (double x : {0.0, 1.0, kPi}) {
                ConeProbe pr;
                pr.x0 = {x, 0, 0};
                pr.window_radius = 0.3;
                pr.directions = circle_directions();
                probes.push_back(pr);
            }
            auto rep = estimate_wavefront(P, w, probes, grid);
            std::printf("WF %s: TS=%d FN=%d FPnear=%d FPfar=%d TR=%d\n", id, rep.true_singular,
                        rep.false_negatives, rep.false_positives_near, rep.false_positives_far,
                        rep.true_regular);
            for (std::size_t pi = 0; pi < rep.probes.size(); ++pi) {
                for (auto& dv : rep.probes[pi].directions) {
                    std::printf("   x=%.2f dir=(%+.0f) sing=%d floor=%d spread=%.2f maxN=%.2f N(l)=",
                                rep.probes[pi].x0[0], dv.direction[0], int(dv.singular),
                                int(dv.floor_certified), dv.spread, dv.max_exponent);
                    for (double e : dv.exponents) std::printf(" %.2f", e);
                    std::printf("\n");
                }
            }
        }
        tick("microlocal S1");
    }
    return 0;
}
