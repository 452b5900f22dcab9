#include <doctest.h>

#include <cmath>
#include <vector>

#include "dynkit/circular.hpp"
#include "dynkit/entropy.hpp"
#include "dynkit/errors.hpp"
#include "dynkit/hkb.hpp"
#include "dynkit/random.hpp"
#include "dynkit/spring.hpp"

using namespace dynkit;

TEST_CASE("spring acceleration") {
    CHECK(spring_accel(0, 0, {1, 0, 1}, 0) == 0.0);
    CHECK(spring_accel(1, 0, {1, 0, 1}, 0) == doctest::Approx(-1.0));
    CHECK(spring_accel(1, 1, {2, 1, 3}, 0) == doctest::Approx(-2.0));
    CHECK_THROWS_AS(spring_accel(0, 0, {0, 0, 1}, 0), std::invalid_argument);
}

TEST_CASE("damped spring matches the closed form") {
    // roots -1 +- 2*pi*i  =>  x(t) = exp(-t) cos(2 pi t) for x0 = 1, v0 = -1
    const SpringParams p{1.0, 2.0, 1.0 + 4.0 * M_PI * M_PI};
    const double dt = 1e-4;
    const int n = 50000; // t in [0, 5]
    const SpringSeries series = simulate_spring(p, 1.0, -1.0, dt, n);

    double max_err = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = dt * i;
        const double exact = std::exp(-t) * std::cos(2.0 * M_PI * t);
        max_err = std::max(max_err, std::abs(series.x[static_cast<std::size_t>(i)] - exact));
    }
    CHECK(max_err < 1e-3);
}

TEST_CASE("undamped spring conserves energy over one period") {
    const SpringParams p{1.0, 0.0, 4.0}; // omega = 2, period = pi
    const double dt = 1e-4;
    const int n = static_cast<int>(M_PI / dt);
    const SpringSeries series = simulate_spring(p, 0.7, 0.0, dt, n);
    const double e0 = series.energy(p, 0);
    const double e1 = series.energy(p, series.x.size() - 1);
    CHECK(std::abs(e1 - e0) / e0 < 1e-3);
}

TEST_CASE("damped spring dissipates monotonically") {
    const SpringParams p{1.0, 0.5, 9.0};
    const SpringSeries series = simulate_spring(p, 1.0, 0.0, 1e-3, 20000);
    for (std::size_t i = 1; i < series.x.size(); ++i)
        CHECK(series.energy(p, i) <= series.energy(p, i - 1) + 1e-9);
}

TEST_CASE("zero initial state stays zero") {
    const SpringSeries series = simulate_spring({1, 2, 3}, 0.0, 0.0, 1e-3, 1000);
    for (double x : series.x) CHECK(x == 0.0);
    for (double v : series.v) CHECK(v == 0.0);
}

TEST_CASE("potential values at the landmarks") {
    const double a = 1.3, b = 0.4;
    CHECK(hkb_potential(0, a, b) == doctest::Approx(-a - b));
    CHECK(hkb_potential(M_PI, a, b) == doctest::Approx(a - b));
    CHECK(hkb_potential(M_PI / 2, a, b) == doctest::Approx(b));
}

TEST_CASE("drift vanishes at 0 and pi for zero detuning") {
    for (double a : {0.5, 1.0, 2.0})
        for (double bb : {0.0, 0.25, 1.0}) {
            HkbParams p{a, bb, 0.7, -0.3, 0.0, 0.0};
            CHECK(std::abs(hkb_drift(0.0, p)) < 1e-12);
            CHECK(std::abs(hkb_drift(M_PI, p)) < 1e-12);
        }
}

TEST_CASE("drift equals detuning minus the potential gradient when c = d = 0") {
    RandomStream rng{300};
    for (int i = 0; i < 100; ++i) {
        HkbParams p;
        p.a = rng.uniform_in(0, 2);
        p.b = rng.uniform_in(0, 2);
        p.delta_omega = rng.uniform_in(-1, 1);
        p.c = 0;
        p.d = 0;
        const double phi = rng.uniform_in(-M_PI, M_PI);
        const double h = 1e-6;
        const double grad =
            (hkb_potential(phi + h, p.a, p.b) - hkb_potential(phi - h, p.a, p.b)) / (2 * h);
        CHECK(std::abs(hkb_drift(phi, p) - (p.delta_omega - grad)) < 1e-6);
    }
}

TEST_CASE("phase integration") {
    SUBCASE("fixed point stays put without noise") {
        const PhaseSeries s = integrate_phase({1, 1, 0, 0, 0, 0}, 0.0, 0.005, 2000, RandomStream{1});
        for (double phi : s.samples) CHECK(phi == 0.0);
    }
    SUBCASE("converges to the in-phase attractor") {
        const PhaseSeries s = integrate_phase({1, 1, 0, 0, 0, 0}, 0.3, 0.005, 2000, RandomStream{1});
        CHECK(std::abs(s.samples.back()) < 1e-3); // t = 10 s
        // monotone approach from (0, pi/2)
        for (std::size_t i = 1; i < s.samples.size(); ++i)
            CHECK(s.samples[i] <= s.samples[i - 1] + 1e-15);
    }
    SUBCASE("noiseless output ignores the seed") {
        const PhaseSeries s1 = integrate_phase({1, 1, 0, 0, 0, 0}, 0.4, 0.01, 500, RandomStream{1});
        const PhaseSeries s2 = integrate_phase({1, 1, 0, 0, 0, 0}, 0.4, 0.01, 500, RandomStream{77});
        CHECK(s1.samples == s2.samples);
    }
    SUBCASE("same seed reproduces the noisy path") {
        HkbParams p{1, 1, 0, 0, 0, 0.1};
        const PhaseSeries s1 = integrate_phase(p, 0.0, 0.005, 3000, RandomStream{42});
        const PhaseSeries s2 = integrate_phase(p, 0.0, 0.005, 3000, RandomStream{42});
        CHECK(s1.samples == s2.samples);
    }
    SUBCASE("more noise widens the stationary distribution") {
        int wider = 0;
        const int reps = 50;
        for (int r = 0; r < reps; ++r) {
            const RandomStream seed_lo = RandomStream{900}.split(static_cast<std::uint64_t>(r));
            const RandomStream seed_hi = RandomStream{901}.split(static_cast<std::uint64_t>(r));
            const PhaseSeries lo = integrate_phase({1, 1, 0, 0, 0, 0.05}, 0, 0.005, 6000, seed_lo);
            const PhaseSeries hi = integrate_phase({1, 1, 0, 0, 0, 0.2}, 0, 0.005, 6000, seed_hi);
            std::vector<double> lo_w(lo.samples.size()), hi_w(hi.samples.size());
            for (std::size_t i = 0; i < lo.samples.size(); ++i) lo_w[i] = wrap_phase(lo.samples[i]);
            for (std::size_t i = 0; i < hi.samples.size(); ++i) hi_w[i] = wrap_phase(hi.samples[i]);
            const double sd_lo = circular_stats(lo_w, 0.0).sd_phi;
            const double sd_hi = circular_stats(hi_w, 0.0).sd_phi;
            if (sd_hi > sd_lo) ++wider;
        }
        CHECK(wider == 50);
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(integrate_phase({1, 1, 0, 0, 0, 0}, 0, 0.0, 10, RandomStream{1}),
                        std::invalid_argument);
        CHECK_THROWS_AS(integrate_phase({1, 1, 0, 0, 0, 0}, 0, 0.01, 0, RandomStream{1}),
                        std::invalid_argument);
    }
}

TEST_CASE("fixed points of the symmetric system") {
    SUBCASE("a = 1, b = 1: stable at 0 and pi") {
        const auto points = fixed_points({1, 1, 0, 0, 0, 0});
        // roots at -pi, -2pi/3-ish pair, 0, ... : check 0 and -pi specifically
        bool found_zero = false, found_pi = false;
        for (const auto& fp : points) {
            CHECK(std::abs(hkb_drift(fp.phi, {1, 1, 0, 0, 0, 0})) < 1e-9);
            if (std::abs(fp.phi) < 1e-8) {
                found_zero = true;
                CHECK(fp.stable);
            }
            if (std::abs(fp.phi + M_PI) < 1e-8) {
                found_pi = true;
                CHECK(fp.stable);
            }
        }
        CHECK(found_zero);
        CHECK(found_pi);
    }
    SUBCASE("drift derivative signs at the attractors") {
        // analytic slopes: -(a + 4b) at 0, a - 4b at pi
        const HkbParams p{1, 1, 0, 0, 0, 0};
        const double h = 1e-6;
        const double slope0 = (hkb_drift(h, p) - hkb_drift(-h, p)) / (2 * h);
        const double slope_pi = (hkb_drift(M_PI + h, p) - hkb_drift(M_PI - h, p)) / (2 * h);
        CHECK(slope0 == doctest::Approx(-5.0).epsilon(1e-4));
        CHECK(slope_pi == doctest::Approx(-3.0).epsilon(1e-4));
    }
    SUBCASE("shallow anti-phase becomes unstable") {
        const auto points = fixed_points({1, 0.2, 0, 0, 0, 0});
        bool found_pi = false;
        for (const auto& fp : points)
            if (std::abs(fp.phi + M_PI) < 1e-8) {
                found_pi = true;
                CHECK_FALSE(fp.stable);
            }
        CHECK(found_pi);
    }
    SUBCASE("anti-phase stability boundary at b/a = 1/4") {
        // bisection on b with a = 1
        double lo = 0.05, hi = 0.6; // unstable at lo, stable at hi
        auto pi_stable = [](double b) {
            for (const auto& fp : fixed_points({1, b, 0, 0, 0, 0}))
                if (std::abs(fp.phi + M_PI) < 1e-6) return fp.stable;
            return false;
        };
        REQUIRE_FALSE(pi_stable(lo));
        REQUIRE(pi_stable(hi));
        while (hi - lo > 1e-4) {
            const double mid = 0.5 * (lo + hi);
            (pi_stable(mid) ? hi : lo) = mid;
        }
        CHECK(std::abs(0.5 * (lo + hi) - 0.25) < 0.02);
    }
    SUBCASE("large detuning removes all fixed points") {
        const auto points = fixed_points({0.3, 0.1, 0, 0, 2.0, 0});
        CHECK(points.empty());
    }
    SUBCASE("stable and unstable roots alternate") {
        const auto points = fixed_points({1, 1, 0, 0, 0.2, 0});
        REQUIRE(points.size() >= 2);
        REQUIRE(points.size() % 2 == 0);
        for (std::size_t i = 1; i < points.size(); ++i)
            CHECK(points[i].stable != points[i - 1].stable);
    }
}
