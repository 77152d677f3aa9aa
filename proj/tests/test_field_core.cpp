#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "salpeter/errors.hpp"
#include "salpeter/field.hpp"
#include "salpeter/grid.hpp"
#include "salpeter/profile.hpp"
#include "salpeter/quadrature.hpp"

#include "support/oracles.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace salpeter;
using std::complex;

TEST_CASE("grid rejects invalid shapes") {
    CHECK_THROWS_AS(Grid1D(0.0, 1024), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(-3.0, 1024), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D(8.0, 4), std::invalid_argument);     // too small
    CHECK_THROWS_AS(Grid1D(8.0, 1000), std::invalid_argument);  // not a power of two
    CHECK_NOTHROW(Grid1D(8.0, 8));
}

TEST_CASE("grid points and momenta form the exact discrete dual") {
    const Grid1D grid(16.0, 256);
    CHECK(grid.spacing() == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(grid.point(0) == doctest::Approx(-16.0).epsilon(1e-15));
    CHECK(grid.point(128) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(grid.point(255) == doctest::Approx(16.0 - 0.125).epsilon(1e-15));

    const Eigen::ArrayXd p = grid.momenta();
    const double dp = EIGEN_PI / 16.0;
    CHECK(p[0] == 0.0);
    CHECK(p[1] == doctest::Approx(dp).epsilon(1e-15));
    CHECK(p[255] == doctest::Approx(-dp).epsilon(1e-15));
    CHECK(p[128] == doctest::Approx(-128 * dp).epsilon(1e-15));
    CHECK(grid.momentum_spacing() == doctest::Approx(dp).epsilon(1e-15));
    CHECK(grid.nyquist() == doctest::Approx(128 * dp).epsilon(1e-15));
}

TEST_CASE("bump profile validation and pointwise values") {
    CHECK_THROWS_AS(make_bump(0.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_bump(0.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_bump(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_bump(0.0, 1.0, -2.0), std::invalid_argument);

    const Profile bump = make_bump(0.0, 1.0, 1.0);
    CHECK(bump(0.5) == doctest::Approx(oracle::bump::value_half).epsilon(1e-15));
    CHECK(bump(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(bump.max_value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

    // Exact zero outside (and on the edge of) the support, no rounding fuzz.
    CHECK(bump(1.0) == 0.0);
    CHECK(bump(-1.0) == 0.0);
    CHECK(bump(1.0 + 1e-300) == 0.0);
    CHECK(bump(57.0) == 0.0);

    const Profile shifted = make_bump(2.0, 0.5, 3.0);
    CHECK(shifted.support_left() == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(shifted.support_right() == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(shifted(2.0) == doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-15));

    const Profile mirror = shifted.reflected();
    CHECK(mirror(-1.7) == doctest::Approx(shifted(1.7)).epsilon(1e-15));
}

TEST_CASE("bump vanishes to all orders at the support edge") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    // Value and first two centred finite differences must all tend to zero
    // as the edge is approached -- the C-infinity flatness that powers the
    // super-polynomial transform decay.  The function varies on the scale
    // eps^2 near the edge, so the difference step must shrink accordingly.
    double prev_v = 1.0, prev_d1 = 1e30, prev_d2 = 1e30;
    for (double eps : {0.05, 0.02, 0.01}) {
        const double x = 1.0 - eps;
        const double d = eps * eps / 10.0;
        const double v = bump(x);
        const double d1 = std::abs(bump(x + d) - bump(x - d)) / (2 * d);
        const double d2 = std::abs(bump(x + d) - 2 * bump(x) + bump(x - d)) / (d * d);
        CHECK(v < prev_v);
        CHECK(d1 < prev_d1);
        CHECK(d2 < prev_d2);
        prev_v = v;
        prev_d1 = d1;
        prev_d2 = d2;
    }
    CHECK(prev_v < 1e-20);
    CHECK(prev_d1 < 1e-16);
    CHECK(prev_d2 < 1e-12);
}

TEST_CASE("analytic profile derivative matches finite differences") {
    const Profile bump = make_bump(0.3, 1.7, 2.0);
    for (double x : {-1.0, -0.2, 0.3, 0.9, 1.6}) {
        const double d = 1e-6;
        const double fd = (bump(x + d) - bump(x - d)) / (2 * d);
        CHECK(bump.derivative(x) == doctest::Approx(fd).epsilon(1e-7));
    }
    CHECK(bump.derivative(2.0) == 0.0);
    CHECK(bump.derivative(-1.4) == 0.0);
}

TEST_CASE("sampling requires the support to fit with a margin") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    CHECK_THROWS_AS(sample(bump, Grid1D(0.9, 256)), domain_too_small);
    CHECK_THROWS_AS(sample(bump, Grid1D(1.0, 256)), domain_too_small);
    CHECK_NOTHROW(sample(bump, Grid1D(2.0, 256)));

    const Field field = sample(bump, Grid1D(16.0, 1024));
    CHECK(field.time == 0.0);
    CHECK(field.samples.size() == 1024);
    CHECK(std::isfinite(l2_norm(field)));
    // Sampled values are the profile values exactly.
    const Grid1D& g = field.grid;
    for (Eigen::Index j : {0, 317, 512, 700}) {
        CHECK(field.samples[j].real() == doctest::Approx(bump(g.point(j))).epsilon(1e-15));
        CHECK(field.samples[j].imag() == 0.0);
    }
}

TEST_CASE("transform round-trip is the identity to accumulation error") {
    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const Grid1D grid(8.0, 256);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        Field field{grid, Eigen::ArrayXcd(grid.size()), 0.0};
        for (Eigen::Index j = 0; j < grid.size(); ++j)
            field.samples[j] = complex<double>(unif(rng), unif(rng));
        const Field back = inverse_transform(forward_transform(field));
        const double rel = (back.samples - field.samples).abs().maxCoeff() /
                           field.samples.abs().maxCoeff();
        worst = std::max(worst, rel);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("Parseval: field and spectrum carry the same L2 norm") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const Grid1D grid(8.0, 512);
    for (int trial = 0; trial < 100; ++trial) {
        Field field{grid, Eigen::ArrayXcd(grid.size()), 0.0};
        for (Eigen::Index j = 0; j < grid.size(); ++j)
            field.samples[j] = complex<double>(unif(rng), unif(rng));
        const double nf = l2_norm(field);
        const double ns = l2_norm(forward_transform(field));
        CHECK(std::abs(nf - ns) / nf < 1e-12);
    }
}

TEST_CASE("discrete L2 norm of the bump matches the closed-form integral") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    const Field field = sample(bump, Grid1D(64.0, 1 << 14));
    CHECK(oracle::rel_err(l2_norm(field), oracle::bump::l2) < 1e-13);
}

TEST_CASE("L2 norm is grid-independent under refinement") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    const double coarse = l2_norm(sample(bump, Grid1D(16.0, 1024)));
    const double fine = l2_norm(sample(bump, Grid1D(16.0, 2048)));
    CHECK(std::abs(coarse - fine) / fine < 1e-6);
}

TEST_CASE("spectrum matches direct quadrature of the transform") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    const Grid1D grid(64.0, 1 << 14);
    const Spectrum spectrum = forward_transform(sample(bump, grid));
    const double dp = grid.momentum_spacing();

    // Lattice momenta nearest to 0, 1 and 5; the oracle quadrature is
    // evaluated at exactly the same lattice values.
    for (double target : {0.0, 1.0, 5.0}) {
        const auto k = static_cast<Eigen::Index>(std::lround(target / dp));
        const double p = dp * static_cast<double>(k);
        const complex<double> direct = oracle::integrate(
            [&](double x) {
                return bump(x) * std::exp(complex<double>(0.0, -p * x));
            },
            -1.0, 1.0, 64) / 2.5066282746310005024;
        CHECK(oracle::rel_err(spectrum.coefficients[k], direct) < 1e-8);
    }

    // The frozen continuum values pin down the oracle itself.
    const complex<double> at0 = oracle::integrate(
        [&](double x) { return complex<double>(bump(x), 0.0); }, -1.0, 1.0, 64) /
        2.5066282746310005024;
    CHECK(oracle::rel_err(at0.real(), oracle::bump::transform_0) < 1e-14);
}

TEST_CASE("band-limited evaluation reproduces grid samples") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    const Grid1D grid(16.0, 2048);
    const Field field = sample(bump, grid);
    const Spectrum spectrum = forward_transform(field);
    for (Eigen::Index j : {311, 1024, 1290}) {
        const complex<double> v = value_at(spectrum, grid.point(j));
        CHECK(std::abs(v - field.samples[j]) < 1e-12 * bump.max_value());
    }
}

TEST_CASE("adaptive quadrature agrees with the fixed-rule oracle") {
    const Profile bump = make_bump(0.0, 1.0, 1.0);
    const double adaptive = integrate([&](double x) { return bump(x); }, -1.0, 1.0);
    CHECK(oracle::rel_err(adaptive, oracle::bump::integral) < 1e-12);
    const double fixed = oracle::integrate([&](double x) { return bump(x); }, -1.0, 1.0, 64);
    CHECK(oracle::rel_err(fixed, oracle::bump::integral) < 1e-14);

    const double sq = integrate([&](double x) { return bump(x) * bump(x); }, -1.0, 1.0);
    CHECK(oracle::rel_err(sq, oracle::bump::integral_sq) < 1e-12);

    // Oscillatory complex integrand.
    const complex<double> osc = integrate(
        [&](double x) { return bump(x) * std::exp(complex<double>(0.0, -5.0 * x)); }, -1.0,
        1.0);
    CHECK(oracle::rel_err(osc.real() / 2.5066282746310005024, oracle::bump::transform_5) <
          1e-9);
}

TEST_CASE("quadrature reports unreachable tolerances instead of lying") {
    QuadratureOptions opt;
    opt.abs_tol = 1e-30;
    opt.rel_tol = 1e-30;
    opt.max_intervals = 24;
    bool threw = false;
    try {
        integrate([](double x) { return std::cos(73.0 * x * x); }, 0.0, 20.0, opt);
    } catch (const accuracy_failure& failure) {
        threw = true;
        CHECK(failure.achieved() > failure.requested());
    }
    CHECK(threw);
}
