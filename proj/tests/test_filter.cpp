#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wavereg/filter.hpp"

using namespace wavereg;

namespace {

// independent quadrature oracle: F_hat(r) = 2 * integral_0^b F(x) cos(r x) dx
// by composite Simpson on a fine grid
double fhat_oracle(const FilterSpec& f, double r, std::size_t n = 200000) {
    const double h = f.b / double(n);
    double acc = f(0.0) * 1.0 + f(f.b) * std::cos(r * f.b);
    for (std::size_t j = 1; j < n; ++j) {
        const double x = double(j) * h;
        acc += (j % 2 ? 4.0 : 2.0) * f(x) * std::cos(r * x);
    }
    return 2.0 * acc * h / 3.0;
}

}  // namespace

TEST_CASE("plateau filter shape") {
    FilterSpec f(1.0, 2.0);
    CHECK(f(0.5) == 1.0);
    CHECK(f(-0.999) == 1.0);
    CHECK(f(3.0) == 0.0);
    CHECK(f(-2.0) == 0.0);

    SUBCASE("transition value from the glue formula, with its reflection identity") {
        const double v = f(1.5);
        CHECK(v > 0.0);
        CHECK(v < 1.0);
        CHECK(v == doctest::Approx(0.5).epsilon(1e-15));  // glue midpoint
        for (double x : {1.1, 1.3, 1.7, 1.95}) {
            // glue(t) + glue(1-t) = 1  <=>  F(x) + F(a+b-x) = 1 on the transition
            CHECK(f(x) + f(f.a + f.b - x) == doctest::Approx(1.0).epsilon(1e-14));
            const double t = (f.b - x) / (f.b - f.a);
            CHECK(f(x) == doctest::Approx(smooth_glue(t)).epsilon(1e-15));
        }
    }

    SUBCASE("bad parameters are rejected") {
        CHECK_THROWS_AS(FilterSpec(2.0, 2.0), std::invalid_argument);
        CHECK_THROWS_AS(FilterSpec(3.0, 2.0), std::invalid_argument);
    }
}

TEST_CASE("divided differences of orders 1..6 stay bounded across the transition") {
    FilterSpec f(1.0, 2.0);
    // order-p divided difference at spacing h approximates F^(p)/p!; for a
    // C-infinity profile it converges instead of blowing up as h shrinks
    auto divdiff = [&](double x, int p, double h) {
        std::vector<double> v(std::size_t(p) + 1);
        for (int i = 0; i <= p; ++i) v[std::size_t(i)] = f(x + double(i) * h);
        for (int lev = 1; lev <= p; ++lev)
            for (int i = 0; i + lev <= p; ++i)
                v[std::size_t(i)] = (v[std::size_t(i + 1)] - v[std::size_t(i)]) / (double(lev) * h);
        return v[0];
    };
    for (int p = 1; p <= 6; ++p) {
        double worst_coarse = 0.0, worst_fine = 0.0;
        for (double x = 1.05; x <= 1.9; x += 0.05) {
            worst_coarse = std::max(worst_coarse, std::abs(divdiff(x, p, 1e-2)));
            worst_fine = std::max(worst_fine, std::abs(divdiff(x, p, 1e-3)));
        }
        CHECK(worst_fine < 1e8);
        CHECK(worst_fine < 5.0 * worst_coarse + 1.0);
    }
}

TEST_CASE("time cutoff shape") {
    CutoffSpec phi(0.5);  // plateau [-0.5, 0.5], support [-1, 1]
    CHECK(phi(0.0) == 1.0);
    CHECK(phi(0.49) == 1.0);
    CHECK(phi(-0.3) == phi(0.3));
    CHECK(phi(0.7) == doctest::Approx(phi(-0.7)).epsilon(1e-15));
    CHECK(phi(0.7) > 0.0);
    CHECK(phi(0.7) < 1.0);
    CHECK(phi(1.0) == 0.0);
    CHECK(phi(2.0) == 0.0);
    CHECK_THROWS_AS(CutoffSpec(0.0), std::invalid_argument);
}

TEST_CASE("fourier table of the filter") {
    FilterSpec f(1.0, 2.0);
    FilterFourierTable tab(f, 1024.0, kPi / 20.0);

    SUBCASE("value at zero is the plateau plus transition mass, 2a + (b-a)") {
        const double oracle = fhat_oracle(f, 0.0);
        CHECK(std::abs(oracle - 3.0) < 1e-10);
        CHECK(std::abs(tab.at_zero() - oracle) < 1e-8);
    }

    SUBCASE("imaginary defect of the even transform is at rounding level") {
        CHECK(tab.imag_defect() < 1e-10);
    }

    SUBCASE("interpolated values match an independent quadrature oracle") {
        for (double r : {0.7, 3.3, 17.5, 55.2}) {
            CHECK(std::abs(tab(r) - fhat_oracle(f, r)) < 1e-8);
            CHECK(tab(r) == tab(-r));
        }
    }

    SUBCASE("super-polynomial decay: |F_hat| below 1e-6 * F_hat(0) on [100, 200]") {
        double worst = 0.0;
        for (double r = 100.0; r <= 200.0; r += tab.dr()) worst = std::max(worst, std::abs(tab(r)));
        CHECK(worst < 1e-6 * tab.at_zero());
    }

    SUBCASE("table reaches the requested range and resolution") {
        CHECK(tab.r_max() >= 1024.0);
        CHECK(tab.dr() <= kPi / 20.0);
        CHECK(tab(tab.r_max() + 5.0) == 0.0);
        CHECK(tab.abs_integral_half() >= tab.at_zero() / 2.0);
    }
}

TEST_CASE("moment structure of the filter transform") {
    FilterSpec f(1.0, 2.0);
    auto mom = filter_moments(f, 6);

    // integral F_hat = 2 pi F(0) = 2 pi
    CHECK(std::abs(mom[0] - kTwoPi) < 1e-6 * kTwoPi);
    // odd moment vanishes by parity
    CHECK(std::abs(mom[1]) < 1e-8);
    // even moments vanish because F is flat at the origin
    CHECK(std::abs(mom[2]) < 1e-6);
    CHECK(std::abs(mom[4]) < 1e-6);
    CHECK(std::abs(mom[6]) < 1e-6);

    CHECK_THROWS_AS(filter_moments(f, 9), std::invalid_argument);
}
