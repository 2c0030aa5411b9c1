#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "wavereg/manifold.hpp"

using namespace wavereg;

namespace {

SpectralCoefficients random_hermitian(const ManifoldModel& m, unsigned seed) {
    SpectralCoefficients c(m);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (std::size_t idx = 0; idx < c.c.size(); ++idx) {
        const auto k = c.mode_of(idx);
        std::array<int, 3> nk{-k[0], -k[1], -k[2]};
        const std::size_t conj_idx = c.index(nk);
        if (conj_idx < idx) continue;
        const std::complex<double> v{uni(rng), conj_idx == idx ? 0.0 : uni(rng)};
        c.c[idx] = v;
        c.c[conj_idx] = std::conj(v);
    }
    return c;
}

}  // namespace

TEST_CASE("forward transform of trivial circle functions") {
    auto m = ManifoldModel::circle(8, 64);
    GridFunction u(m, true);

    SUBCASE("constant 1 -> delta at mode 0") {
        for (std::size_t j = 0; j < 64; ++j) u.values[j] = 1.0;
        auto c = forward_transform(u);
        CHECK(std::abs(c.at({0, 0, 0}) - std::complex<double>(1.0)) < 1e-13);
        for (int k = -8; k <= 8; ++k)
            if (k != 0) CHECK(std::abs(c.at({k, 0, 0})) < 1e-13);
    }

    SUBCASE("cos(theta) -> 1/2 at modes +-1") {
        for (std::size_t j = 0; j < 64; ++j) u.values[j] = std::cos(m.grid_point(j)[0]);
        auto c = forward_transform(u);
        CHECK(std::abs(c.at({1, 0, 0}) - 0.5) < 1e-13);
        CHECK(std::abs(c.at({-1, 0, 0}) - 0.5) < 1e-13);
        CHECK(std::abs(c.at({2, 0, 0})) < 1e-13);
    }

    SUBCASE("exp(i 3 theta) against the direct DFT oracle on 64 points") {
        std::vector<std::complex<double>> samples(64);
        for (std::size_t j = 0; j < 64; ++j) {
            const double th = m.grid_point(j)[0];
            samples[j] = {std::cos(3.0 * th), std::sin(3.0 * th)};
        }
        // direct DFT oracle, independently of the fft path
        for (int k = -8; k <= 8; ++k) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t j = 0; j < 64; ++j) {
                const double th = m.grid_point(j)[0];
                acc += samples[j] * std::exp(std::complex<double>(0.0, -double(k) * th));
            }
            acc /= 64.0;
            const double want = (k == 3) ? 1.0 : 0.0;
            CHECK(std::abs(acc - want) < 1e-12);
        }
        u.values = samples;
        u.real_representing = false;
        auto c = forward_transform(u);
        CHECK(std::abs(c.at({3, 0, 0}) - 1.0) < 1e-12);
        for (int k = -8; k <= 8; ++k)
            if (k != 3) CHECK(std::abs(c.at({k, 0, 0})) < 1e-12);
    }
}

TEST_CASE("inverse transform trivials and round trip") {
    auto m = ManifoldModel::circle(8, 64);

    SUBCASE("single mode 0 coefficient gives the constant 1") {
        SpectralCoefficients c(m);
        c.at({0, 0, 0}) = 1.0;
        auto u = inverse_transform(c);
        for (const auto& v : u.values) CHECK(std::abs(v - std::complex<double>(1.0)) < 1e-13);
    }

    SUBCASE("modes +-1 at 1/2 give cos(theta)") {
        SpectralCoefficients c(m);
        c.at({1, 0, 0}) = 0.5;
        c.at({-1, 0, 0}) = 0.5;
        auto u = inverse_transform(c);
        CHECK(u.real_representing);
        for (std::size_t j = 0; j < u.values.size(); ++j)
            CHECK(std::abs(u.values[j].real() - std::cos(m.grid_point(j)[0])) < 1e-13);
    }

    SUBCASE("random Hermitian round trip below 1e-12") {
        auto c = random_hermitian(m, 123);
        auto u = inverse_transform(c);
        CHECK(u.real_representing);
        auto c2 = forward_transform(u);
        double worst = 0.0;
        for (std::size_t i = 0; i < c.c.size(); ++i) worst = std::max(worst, std::abs(c.c[i] - c2.c[i]));
        CHECK(worst < 1e-12);
    }

    SUBCASE("mode outside the target band is rejected") {
        SpectralCoefficients c(m);
        c.at({8, 0, 0}) = 1.0;
        CHECK_THROWS_AS(inverse_transform(c, {8, 1, 1}), std::invalid_argument);
    }
}

TEST_CASE("eigenvalues of flat models") {
    auto s1 = ManifoldModel::circle(8);
    CHECK(eigenvalue(s1, {0, 0, 0}) == 0.0);
    CHECK(eigenvalue(s1, {3, 0, 0}) == doctest::Approx(9.0).epsilon(1e-15));
    auto t2 = ManifoldModel::torus({kTwoPi, kTwoPi}, {4, 4});
    CHECK(eigenvalue(t2, {1, 1, 0}) == doctest::Approx(2.0).epsilon(1e-15));
    // spectral symmetry
    CHECK(eigenvalue(t2, {1, -2, 0}) == eigenvalue(t2, {-1, 2, 0}));
}

TEST_CASE("counting function on circle and torus") {
    auto s1 = ManifoldModel::circle(4);
    CHECK(counting_function(s1, 10.0) == 7);  // modes -3..3
    CHECK(counting_function(s1, 0.0) == 1);   // only k = 0
    auto t2 = ManifoldModel::torus({kTwoPi, kTwoPi}, {2, 2});
    CHECK(counting_function(t2, 2.0) == 9);   // k in {-1,0,1}^2

    SUBCASE("monotone, jumps exactly at eigenvalues") {
        for (int k = 1; k <= 5; ++k) {
            const double lam = double(k) * double(k);
            CHECK(counting_function(s1, lam) - counting_function(s1, lam - 1e-9) == 2);
        }
        double prev = -1.0;
        for (double lam = 0.0; lam <= 30.0; lam += 0.37) {
            const double cur = double(counting_function(s1, lam));
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("sobolev norm") {
    auto m = ManifoldModel::circle(8, 64);

    SUBCASE("mode 0 gives sqrt(2 pi) for any s") {
        SpectralCoefficients c(m);
        c.at({0, 0, 0}) = 1.0;
        for (double s : {-1.0, 0.0, 2.5}) CHECK(sobolev_norm(c, s) == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-14));
    }

    SUBCASE("cos(theta) at s = 1: hand sum (1+1)*(1/4)*2 = 1") {
        SpectralCoefficients c(m);
        c.at({1, 0, 0}) = 0.5;
        c.at({-1, 0, 0}) = 0.5;
        CHECK(sobolev_norm(c, 1.0) == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-14));
    }

    SUBCASE("s = 0 equals the plain L2 norm for random inputs") {
        for (unsigned seed = 0; seed < 10; ++seed) {
            auto c = random_hermitian(m, 200 + seed);
            double direct = 0.0;
            for (const auto& v : c.c) direct += std::norm(v);
            direct = std::sqrt(m.volume() * direct);
            CHECK(sobolev_norm(c, 0.0) == doctest::Approx(direct).epsilon(1e-13));
        }
    }
}

TEST_CASE("parseval for random band-limited functions") {
    auto m = ManifoldModel::circle(16, 64);
    for (unsigned seed = 0; seed < 5; ++seed) {
        auto c = random_hermitian(m, 300 + seed);
        auto u = inverse_transform(c);
        double grid_l2 = 0.0;
        for (const auto& v : u.values) grid_l2 += std::norm(v);
        grid_l2 *= m.volume() / double(m.grid_size());  // trapezoid weights
        double coef_l2 = 0.0;
        for (const auto& v : c.c) coef_l2 += std::norm(v);
        coef_l2 *= m.volume();
        CHECK(std::abs(grid_l2 - coef_l2) / coef_l2 < 1e-10);
    }
}

TEST_CASE("geodesic distance on flat models") {
    auto s1 = ManifoldModel::circle(4);
    CHECK(geodesic_distance(s1, {0.0, 0, 0}, {kPi, 0, 0}) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(geodesic_distance(s1, {0.1, 0, 0}, {kTwoPi - 0.1, 0, 0}) == doctest::Approx(0.2).epsilon(1e-12));
    auto t2 = ManifoldModel::torus({kTwoPi, kTwoPi}, {2, 2});
    CHECK(geodesic_distance(t2, {0.0, 0.0, 0}, {kPi, kPi, 0}) ==
          doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-14));

    SUBCASE("symmetry and triangle inequality on random triples") {
        std::mt19937 rng(77);
        std::uniform_real_distribution<double> uni(0.0, kTwoPi);
        for (int trial = 0; trial < 200; ++trial) {
            Point x{uni(rng), uni(rng), 0}, y{uni(rng), uni(rng), 0}, z{uni(rng), uni(rng), 0};
            const double dxy = geodesic_distance(t2, x, y);
            const double dyx = geodesic_distance(t2, y, x);
            const double dxz = geodesic_distance(t2, x, z);
            const double dzy = geodesic_distance(t2, z, y);
            CHECK(std::abs(dxy - dyx) < 1e-12);
            CHECK(dxy <= dxz + dzy + 1e-12);
        }
    }
}

TEST_CASE("grid/band invariant is enforced") {
    CHECK_THROWS_AS(ManifoldModel::circle(8, 16), std::invalid_argument);  // 16 < 17
    CHECK_THROWS_AS(ManifoldModel::torus({-1.0}, {4}), std::invalid_argument);
}
