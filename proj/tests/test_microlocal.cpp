#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavereg/harness.hpp"
#include "wavereg/microlocal.hpp"

using namespace wavereg;

namespace {

const RegularizationProcess& flagship() {
    static auto p = RegularizationProcess::wave_window(ManifoldModel::circle(8, 64),
                                                       FilterSpec(1.0, 2.0), CutoffSpec(0.5),
                                                       1.0 / 4096.0);
    return p;
}

ConeProbe circle_probe(double x0, double radius = 0.3) {
    ConeProbe pr;
    pr.x0 = {x0, 0, 0};
    pr.window_radius = radius;
    pr.directions = circle_directions();
    return pr;
}

}  // namespace

TEST_CASE("windowed spectrum basics") {
    const auto& p = flagship();

    SUBCASE("plane wave peaks at its own mode") {
        auto w = make_distribution("plane_wave", p.manifold, {0, 0, 0}, 4);
        auto u = apply_spectral(p, w, 1.0 / 64.0, {1024, 1, 1});
        auto probe = circle_probe(0.0, 1.0);
        auto rays = windowed_directional_spectrum(u, probe, 256.0);
        // positive direction: the peak sits at the dyadic radius 4 and the
        // window-smeared tail has died off an order of magnitude by t >= 16
        const auto& prof = rays[0];
        double at4 = 0.0, far_rest = 0.0;
        for (std::size_t t = 0; t < prof.radii.size(); ++t) {
            if (prof.radii[t] == 4.0) at4 = prof.magnitude[t];
            if (prof.radii[t] >= 16.0) far_rest = std::max(far_rest, prof.magnitude[t]);
        }
        for (std::size_t t = 0; t < prof.radii.size(); ++t)
            if (prof.radii[t] != 4.0) CHECK(prof.magnitude[t] < at4 + 1e-12);
        CHECK(at4 > 10.0 * far_rest);
    }

    SUBCASE("smooth bump decays super-polynomially along every ray") {
        auto w = make_distribution("smooth_bump", p.manifold);
        auto u = apply_spectral(p, w, 1.0 / 64.0, {1024, 1, 1});
        auto rays = windowed_directional_spectrum(u, circle_probe(0.0, 1.0), 256.0);
        for (const auto& ray : rays) {
            // each doubling well beyond the bump band shrinks the magnitude
            // by more than 2^4 (the decay keeps steepening: super-polynomial)
            for (std::size_t t = 0; t + 1 < ray.radii.size(); ++t) {
                if (ray.radii[t] < 64.0) continue;
                if (ray.magnitude[t + 1] <= kRayFloor) continue;
                CHECK(ray.magnitude[t + 1] < ray.magnitude[t] / 16.0);
            }
        }
    }
}

TEST_CASE("cone decay scans separate point singularities from smooth content") {
    const auto& p = flagship();
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);

    SUBCASE("point mass: exponent ladder grows at the singular point") {
        auto w = make_distribution("dirac", p.manifold);
        auto rep = cone_decay_scan(p, w, circle_probe(0.0), grid);
        for (const auto& dv : rep.directions) {
            CHECK(dv.singular);
            CHECK(dv.exponents.back() > dv.exponents.front());
            CHECK(dv.max_exponent > 3.0);
        }
    }

    SUBCASE("jump function: singular at the jump, regular three radii away") {
        auto w = make_distribution("sawtooth_jump", p.manifold);
        auto at0 = cone_decay_scan(p, w, circle_probe(0.0), grid);
        CHECK(at0.directions[0].singular);
        CHECK(at0.directions[1].singular);
        auto at1 = cone_decay_scan(p, w, circle_probe(1.0), grid);  // > 3 * 0.3 away
        CHECK(!at1.directions[0].singular);
        CHECK(!at1.directions[1].singular);
    }

    SUBCASE("smooth bump: flat ladder everywhere") {
        auto w = make_distribution("smooth_bump", p.manifold);
        for (double x : {0.0, kPi}) {
            auto rep = cone_decay_scan(p, w, circle_probe(x), grid);
            for (const auto& dv : rep.directions) {
                CHECK(!dv.singular);
                CHECK((dv.floor_certified || dv.spread < 0.5));
            }
        }
    }
}

TEST_CASE("full wavefront estimation against declared ground truth") {
    const auto& p = flagship();
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);
    for (const char* id : {"dirac", "sawtooth_jump", "smooth_bump"}) {
        auto w = make_distribution(id, p.manifold);
        auto rep = estimate_wavefront(p, w, default_probes(w), grid);
        CHECK(rep.false_negatives == 0);
        CHECK(rep.false_positives_far == 0);
        CHECK(rep.false_positives_near == 0);  // the circle probes sit clear of leakage
        if (w.has_wavefront) CHECK(rep.true_singular == 2);
        CHECK(rep.eps_max == grid.front());
        CHECK(rep.eps_min == grid.back());
    }
}

TEST_CASE("window invariance: halving the radius preserves far verdicts") {
    const auto& p = flagship();
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);
    auto w = make_distribution("sawtooth_jump", p.manifold);
    // probe at pi: more than four radii from the jump for both windows
    for (double r : {0.3, 0.15}) {
        auto rep = cone_decay_scan(p, w, circle_probe(kPi, r), grid);
        CHECK(!rep.directions[0].singular);
        CHECK(!rep.directions[1].singular);
    }
}

TEST_CASE("torus line mass: conormal singular, tangential regular") {
    auto m = ManifoldModel::torus({kTwoPi, kTwoPi}, {8, 8});
    auto p = RegularizationProcess::wave_window(m, FilterSpec(1.0, 2.0), CutoffSpec(0.5),
                                                1.0 / 512.0);
    auto w = make_distribution("line_delta", m);
    auto grid = geometric_grid(0.25, 0.5, 8);

    ConeProbe on_line;
    on_line.x0 = {0.0, 2.0, 0};
    on_line.window_radius = 0.8;
    on_line.directions = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    auto rep = cone_decay_scan(p, w, on_line, grid);
    CHECK(rep.directions[0].singular);    // conormal +x
    CHECK(!rep.directions[1].singular);   // tangential +y
    CHECK(rep.directions[2].singular);    // conormal -x
    CHECK(!rep.directions[3].singular);   // tangential -y

    ConeProbe off_line;
    off_line.x0 = {kPi, 1.0, 0};
    off_line.window_radius = 0.8;
    off_line.directions = torus_directions(8);
    auto rep_off = cone_decay_scan(p, w, off_line, grid);
    for (const auto& dv : rep_off.directions) CHECK(!dv.singular);
}
