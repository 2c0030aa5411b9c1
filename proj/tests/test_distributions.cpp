#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "wavereg/distributions.hpp"

using namespace wavereg;

namespace {

// band-limited test function from explicit coefficients
SpectralCoefficients test_function(const ManifoldModel& m,
                                   std::initializer_list<std::pair<int, std::complex<double>>> modes) {
    SpectralCoefficients c(m);
    for (const auto& [k, v] : modes) {
        c.at({k, 0, 0}) = v;
        c.at({-k, 0, 0}) += std::conj(v);
        if (k == 0) c.at({0, 0, 0}) = v;  // undo the double add for k = 0
    }
    return c;
}

// partial Sobolev sums P(K) = vol * sum_{|k|<=K} (1+lambda)^t |w_k|^2
double partial_sum(const TestDistribution& w, double t, int K) {
    double acc = 0.0;
    if (w.manifold.dim == 1) {
        for (int k = -K; k <= K; ++k)
            acc += std::pow(1.0 + double(k) * double(k), t) * std::norm(w.coeff({k, 0, 0}));
    } else {
        for (int k0 = -K; k0 <= K; ++k0)
            for (int k1 = -K; k1 <= K; ++k1)
                acc += std::pow(1.0 + eigenvalue(w.manifold, {k0, k1, 0}), t) *
                       std::norm(w.coeff({k0, k1, 0}));
    }
    return w.manifold.volume() * acc;
}

}  // namespace

TEST_CASE("dirac reproduces point evaluation through truncated pairings") {
    auto m = ManifoldModel::circle(8, 64);
    auto w = make_distribution("dirac", m, {0.9, 0, 0});
    // five band-limited test functions with known values at 0.9
    std::vector<SpectralCoefficients> tests;
    std::vector<double> want;
    auto add = [&](std::initializer_list<std::pair<int, std::complex<double>>> modes) {
        tests.push_back(test_function(m, modes));
        double v = 0.0;
        for (const auto& [k, cv] : modes) {
            if (k == 0) v += cv.real();
            else v += 2.0 * (cv * std::exp(std::complex<double>(0, double(k) * 0.9))).real();
        }
        want.push_back(v);
    };
    add({{0, 1.0}});
    add({{1, 0.5}});
    add({{2, std::complex<double>(0.25, -0.1)}});
    add({{3, std::complex<double>(0.0, 0.2)}, {1, 0.1}});
    add({{5, 0.3}, {0, -0.4}});

    // pairing converges to psi(x0) as the truncation grows (here: exact once
    // the band covers the test function, by orthogonality)
    for (std::size_t i = 0; i < tests.size(); ++i) {
        const auto got = pair(w, tests[i], 8);
        CHECK(std::abs(got - want[i]) < 1e-12);
        CHECK(std::abs(got.imag()) < 1e-12);
    }
}

TEST_CASE("trivial pairings") {
    auto m = ManifoldModel::circle(8, 64);

    SUBCASE("<delta_0, cos> = 1") {
        auto w = make_distribution("dirac", m);
        auto cosf = test_function(m, {{1, 0.5}});
        CHECK(std::abs(pair(w, cosf, 8) - 1.0) < 1e-13);
    }

    SUBCASE("<delta'_0, sin> = -1") {
        auto w = make_distribution("dirac_derivative", m);
        auto sinf = test_function(m, {{1, std::complex<double>(0.0, -0.5)}});  // sin
        CHECK(std::abs(pair(w, sinf, 8) - (-1.0)) < 1e-13);
    }

    SUBCASE("<sawtooth, 1> = 0") {
        auto w = make_distribution("sawtooth_jump", m);
        auto one = test_function(m, {{0, 1.0}});
        CHECK(std::abs(pair(w, one, 8)) < 1e-14);
    }
}

TEST_CASE("sawtooth coefficients against a direct quadrature oracle") {
    auto m = ManifoldModel::circle(8, 64);
    auto w = make_distribution("sawtooth_jump", m);
    // w(theta) = (pi - theta)/(2 pi) on (0, 2 pi); oracle: fine midpoint rule
    const std::size_t n = 1 << 16;
    for (int k : {1, 2, 5, -3}) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double th = (double(j) + 0.5) * kTwoPi / double(n);
            acc += (kPi - th) / kTwoPi * std::exp(std::complex<double>(0, -double(k) * th));
        }
        acc /= double(n);  // (1/2pi) integral -> average
        const auto got = w.coeff({k, 0, 0});
        CHECK(std::abs(got - acc) < 1e-9);
        // exact formula 1/(2 pi i k)
        CHECK(std::abs(got - 1.0 / (std::complex<double>(0, kTwoPi * double(k)))) < 1e-15);
    }
    CHECK(w.coeff({0, 0, 0}) == std::complex<double>(0.0, 0.0));
    CHECK(w.sobolev_order == 0.5);
}

TEST_CASE("line delta on the torus") {
    auto m = ManifoldModel::torus({kTwoPi, kTwoPi}, {8, 8});
    auto w = make_distribution("line_delta", m);
    CHECK(std::abs(w.coeff({3, 0, 0}) - 1.0 / kTwoPi) < 1e-15);
    CHECK(w.coeff({3, 1, 0}) == std::complex<double>(0.0, 0.0));
    CHECK(w.sobolev_order == -0.5);
    CHECK(w.support_distance({0.0, 1.3, 0}) == 0.0);
    CHECK(w.support_distance({0.5, 1.3, 0}) == doctest::Approx(0.5));
    CHECK(w.is_singular_direction({1.0, 0.0}));
    CHECK(!w.is_singular_direction({0.0, 1.0}));
}

TEST_CASE("declared metadata: hermitian symmetry and wavefront flags") {
    auto m = ManifoldModel::circle(8, 64);
    for (const char* id : {"dirac", "dirac_derivative", "sawtooth_jump", "smooth_bump"}) {
        auto w = make_distribution(id, m, {1.1, 0, 0});
        for (int k = 0; k <= 8; ++k) {
            const auto a = w.coeff({k, 0, 0});
            const auto b = w.coeff({-k, 0, 0});
            CHECK(std::abs(a - std::conj(b)) < 1e-15);
        }
    }
    CHECK(make_distribution("smooth_bump", m).has_wavefront == false);
    CHECK(make_distribution("dirac", m).is_singular_direction({1.0, 0.0}));
    CHECK_THROWS_AS(make_distribution("not_a_member", m), std::invalid_argument);
    CHECK_THROWS_AS(make_distribution("line_delta", m), std::invalid_argument);
}

TEST_CASE("declared sobolev orders pass the partial-sum growth test") {
    auto m = ManifoldModel::circle(8, 64);
    // divergence at s0 + 1/4 (ratio of partial sums stays away from 1),
    // convergence at s0 - 1/4 (ratio approaches 1)
    for (const char* id : {"dirac", "dirac_derivative", "sawtooth_jump"}) {
        auto w = make_distribution(id, m);
        const double s0 = w.sobolev_order;
        const double div_ratio = partial_sum(w, s0 + 0.25, 4096) / partial_sum(w, s0 + 0.25, 2048);
        const double conv_ratio = partial_sum(w, s0 - 0.25, 4096) / partial_sum(w, s0 - 0.25, 2048);
        CHECK(div_ratio > 1.15);
        CHECK(conv_ratio < 1.05);
    }
    // torus member
    auto t2 = ManifoldModel::torus({kTwoPi, kTwoPi}, {8, 8});
    auto line = make_distribution("line_delta", t2);
    CHECK(partial_sum(line, -0.25, 1024) / partial_sum(line, -0.25, 512) > 1.15);
    CHECK(partial_sum(line, -0.75, 1024) / partial_sum(line, -0.75, 512) < 1.05);
    // smooth member: every order converges
    auto bump = make_distribution("smooth_bump", m);
    CHECK(partial_sum(bump, 7.0, 64) / partial_sum(bump, 7.0, 32) == doctest::Approx(1.0));
}

TEST_CASE("pairing is linear and conjugate-consistent") {
    auto m = ManifoldModel::circle(8, 64);
    auto w = make_distribution("sawtooth_jump", m);
    auto f1 = test_function(m, {{1, 0.5}, {4, std::complex<double>(0.0, 0.3)}});
    auto f2 = test_function(m, {{2, -0.2}, {3, 0.7}});
    SpectralCoefficients sum(m);
    for (std::size_t i = 0; i < sum.c.size(); ++i) sum.c[i] = 2.0 * f1.c[i] + f2.c[i];
    const auto lhs = pair(w, sum, 8);
    const auto rhs = 2.0 * pair(w, f1, 8) + pair(w, f2, 8);
    CHECK(std::abs(lhs - rhs) < 1e-13);
    // real distribution against real test function: imaginary part at rounding
    CHECK(std::abs(pair(w, f2, 8).imag()) < 1e-12);
}

TEST_CASE("pairing band validation") {
    auto m = ManifoldModel::circle(8, 64);
    auto w = make_distribution("dirac", m);
    SpectralCoefficients f(m);
    f.at({1, 0, 0}) = 1.0;
    CHECK_THROWS_AS(pair(w, f, 16), std::invalid_argument);
}
