#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavereg/asymptotics.hpp"

using namespace wavereg;

namespace {

const RegularizationProcess& flagship() {
    static auto p = RegularizationProcess::wave_window(ManifoldModel::circle(8, 64),
                                                       FilterSpec(1.0, 2.0), CutoffSpec(0.5),
                                                       1.0 / 4096.0);
    return p;
}

EpsilonScan synthetic(std::vector<double> eps, std::function<double(double)> f) {
    EpsilonScan sc;
    sc.seminorm_id = "synthetic";
    for (double e : eps) {
        sc.eps.push_back(e);
        sc.values.push_back(f(e));
    }
    return sc;
}

}  // namespace

TEST_CASE("slope fits on synthetic power laws") {
    auto grid = geometric_grid(0.25, 0.5, 9);

    SUBCASE("values eps^2 give slope 2 with perfect fit") {
        auto fit = fit_slope(synthetic(grid, [](double e) { return e * e; }));
        CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(fit.max_residual < 1e-12);
    }

    SUBCASE("values 5 eps^-3 give slope -3 and intercept log 5") {
        auto fit = fit_slope(synthetic(grid, [](double e) { return 5.0 * std::pow(e, -3.0); }));
        CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-12));
        CHECK(fit.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-12));
    }

    SUBCASE("scale covariance: constants change the intercept only") {
        auto f1 = fit_slope(synthetic(grid, [](double e) { return std::pow(e, 1.7); }));
        auto f2 = fit_slope(synthetic(grid, [](double e) { return 77.0 * std::pow(e, 1.7); }));
        CHECK(std::abs(f1.slope - f2.slope) < 1e-12);
        CHECK(f2.intercept - f1.intercept == doctest::Approx(std::log(77.0)).epsilon(1e-12));
    }

    SUBCASE("fewer than five usable points is insufficient data") {
        auto sc = synthetic(geometric_grid(0.5, 0.5, 8), [](double e) { return e; });
        for (std::size_t i = 4; i < sc.values.size(); ++i) sc.values[i] = 0.0;  // floored
        CHECK_THROWS_AS(fit_slope(sc), std::invalid_argument);
    }

    SUBCASE("grid validation") {
        CHECK_THROWS_AS(geometric_grid(0.5, 1.2, 4), std::invalid_argument);
        CHECK_THROWS_AS(check_scan_grid(geometric_grid(0.5, 0.5, 4)), std::invalid_argument);
        CHECK_THROWS_AS(check_scan_grid(geometric_grid(0.5, 0.1, 9)), std::invalid_argument);
    }
}

TEST_CASE("point-mass scans on the circle") {
    const auto& p = flagship();
    auto w = make_distribution("dirac", p.manifold);
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);

    SUBCASE("sup values increase as eps decreases") {
        auto scans = run_scan(p, w, {"sup0"}, grid);
        for (std::size_t i = 1; i < scans[0].values.size(); ++i)
            CHECK(scans[0].values[i] > scans[0].values[i - 1]);
    }

    SUBCASE("L2 value doubles from eps to eps/4 (slope -1/2)") {
        auto scans = run_scan(p, w, {"L2"}, grid);
        const auto& v = scans[0].values;
        for (std::size_t i = 0; i + 2 < v.size(); ++i) {
            CHECK(v[i + 2] / v[i] > 1.9);
            CHECK(v[i + 2] / v[i] < 2.1);
        }
    }

    SUBCASE("sup slope is -1 within 0.1") {
        auto scans = run_scan(p, w, {"sup0"}, grid);
        auto fit = fit_slope(scans[0]);
        CHECK(std::abs(fit.slope + 1.0) < 0.1);
    }

    SUBCASE("derivative ladder: slope of sup of the j-th derivative is -1-j") {
        auto scans = run_scan(p, w, {"sup0", "sup1", "sup2"}, grid);
        for (int j = 0; j <= 2; ++j) {
            auto fit = fit_slope(scans[std::size_t(j)]);
            CHECK(std::abs(fit.slope + 1.0 + double(j)) < 0.15);
        }
    }
}

TEST_CASE("sobolev ladder matches the declared orders") {
    const auto& p = flagship();
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);

    // slope of the H^s scan is -(s - s0) for s > s0, ~0 for s < s0
    SUBCASE("point mass: s0 = -1/2") {
        auto w = make_distribution("dirac", p.manifold);
        auto scans = run_scan(p, w, {"L2", "H1", "H2"}, grid);
        CHECK(std::abs(fit_slope(scans[0]).slope + 0.5) < 0.2);
        CHECK(std::abs(fit_slope(scans[1]).slope + 1.5) < 0.2);
        CHECK(std::abs(fit_slope(scans[2]).slope + 2.5) < 0.2);
    }

    SUBCASE("jump function: s0 = +1/2, L2 flat") {
        auto w = make_distribution("sawtooth_jump", p.manifold);
        auto scans = run_scan(p, w, {"L2", "H1", "H2"}, grid);
        CHECK(std::abs(fit_slope(scans[0]).slope) < 0.1);
        CHECK(std::abs(fit_slope(scans[1]).slope + 0.5) < 0.2);
        CHECK(std::abs(fit_slope(scans[2]).slope + 1.5) < 0.2);
    }
}

TEST_CASE("smooth member scans are flat once the plateau covers the band") {
    const auto& p = flagship();
    auto w = make_distribution("smooth_bump", p.manifold);
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);
    auto scans = run_scan(p, w, {"L2"}, grid);
    // eps < a/K_bump = 1/8 holds from the start; values constant up to
    // cutoff smearing, which is below 1e-10 relative from eps = 2^-8 on
    const auto& v = scans[0].values;
    for (std::size_t i = 5; i + 1 < v.size(); ++i)
        CHECK(std::abs(v[i + 1] - v[i]) < 1e-10 * v[i]);
}

TEST_CASE("classification") {
    const auto& p = flagship();
    auto grid = geometric_grid(1.0 / 16.0, 0.5, 9);

    SUBCASE("point-mass scans are moderate with N = 1 from the sup norm") {
        auto w = make_distribution("dirac", p.manifold);
        auto scans = run_scan(p, w, {"L2", "sup0"}, grid);
        auto cls = classify_moderate(scans);
        CHECK(cls.verdict);
        CHECK(cls.exponent == doctest::Approx(1.0));
        auto neg = classify_negligible(scans, 8.0);
        CHECK(!neg.verdict);  // a growing net is certainly not negligible
    }

    SUBCASE("smooth-member residual is negligible") {
        auto w = make_distribution("smooth_bump", p.manifold);
        auto scans = run_residual_scan(
            p, w, {"L2", "sup0"}, grid, [&](double eps) { return p.prepare_minus_one(eps); },
            "-residual");
        auto cls = classify_negligible(scans, 8.0);
        CHECK(cls.verdict);
        CHECK(cls.exponent > 8.0);
    }

    SUBCASE("floored scans are negligible by the floor rule") {
        auto sc = synthetic(grid, [](double) { return 1e-14; });
        auto cls = classify_negligible({sc}, 8.0);
        CHECK(cls.verdict);
        CHECK(cls.per_seminorm[0].reason == "floor");
    }

    SUBCASE("a power law below the order bound is rejected") {
        auto sc = synthetic(grid, [](double e) { return std::pow(e, 3.0); });
        auto cls = classify_negligible({sc}, 6.0);
        CHECK(!cls.verdict);
        CHECK(std::abs(cls.per_seminorm[0].tail_slope - 3.0) < 0.2);
    }

    SUBCASE("noise re-emerging above the floor is flagged") {
        auto sc = synthetic(grid, [](double e) { return e > 0.01 ? 1e-3 * e * e : 0.0; });
        sc.values.back() = 5e-11;  // spurious late value
        auto cls = classify_negligible({sc}, 1.0);
        CHECK(!cls.verdict);
    }
}
