// scratch calibration: torus line_delta microlocal (not part of the deliverable)
#include <chrono>
#include <cstdio>

#include "wavereg/microlocal.hpp"

using namespace wavereg;

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto m = ManifoldModel::torus({kTwoPi, kTwoPi}, {8, 8});
    FilterSpec f(1.0, 2.0);
    auto P = RegularizationProcess::wave_window(m, f, CutoffSpec(0.5), 1.0 / 512.0);
    auto w = make_distribution("line_delta", m);

    auto grid = geometric_grid(0.25, 0.5, 8);  // 2^-2 .. 2^-6
    std::printf("bands:");
    for (double e : grid) { auto K = P.band(e); std::printf(" %d", K[0]); }
    std::printf("\n");

    std::vector<ConeProbe> probes;
    for (double y : {0.0, 2.0}) {
        ConeProbe pr;
        pr.x0 = {0.0, y, 0};
        pr.window_radius = 0.8;
        pr.directions = torus_directions(16);
        probes.push_back(pr);
    }
    ConeProbe off;  // far from the line
    off.x0 = {kPi, 1.0, 0};
    off.window_radius = 0.8;
    off.directions = torus_directions(16);
    probes.push_back(off);

    auto rep = estimate_wavefront(P, w, probes, grid);
    auto t1 = std::chrono::steady_clock::now();
    std::printf("line_delta: TS=%d FN=%d FPnear=%d FPfar=%d TR=%d  [%.0f ms]\n",
                rep.true_singular, rep.false_negatives, rep.false_positives_near,
                rep.false_positives_far, rep.true_regular,
                std::chrono::duration<double, std::milli>(t1 - t0).count());
    for (auto& pr : rep.probes) {
        std::printf("probe (%.2f, %.2f):\n", pr.x0[0], pr.x0[1]);
        for (auto& dv : pr.directions) {
            if (!dv.singular && dv.floor_certified) continue;
            std::printf("  dir=(%+.2f,%+.2f) sing=%d spread=%.2f maxN=%.2f N(l)=", dv.direction[0],
                        dv.direction[1], int(dv.singular), dv.spread, dv.max_exponent);
            for (double e : dv.exponents) std::printf(" %.2f", e);
            std::printf("\n");
        }
    }
    return 0;
}
