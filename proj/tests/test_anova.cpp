#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dynkit/anova.hpp"
#include "dynkit/random.hpp"

using namespace dynkit;

namespace {

using Cells = std::vector<std::vector<std::vector<double>>>;

// Brute-force sums of squares straight from the mean decomposition, as an
// oracle for the implementation's marginal-total formulas.
struct OracleSS {
    double ss_a{0}, ss_b{0}, ss_ab{0}, ss_error{0}, ss_total{0};
};

OracleSS brute_force_ss(const Cells& cells) {
    const std::size_t a = cells.size();
    const std::size_t b = cells[0].size();
    const std::size_t r = cells[0][0].size();

    double grand = 0.0;
    for (const auto& row : cells)
        for (const auto& cell : row)
            for (double v : cell) grand += v;
    grand /= static_cast<double>(a * b * r);

    OracleSS out;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) {
            double cell_mean = 0.0;
            for (double v : cells[i][j]) cell_mean += v;
            cell_mean /= static_cast<double>(r);

            double row_mean = 0.0;
            for (std::size_t jj = 0; jj < b; ++jj)
                for (double v : cells[i][jj]) row_mean += v;
            row_mean /= static_cast<double>(b * r);

            double col_mean = 0.0;
            for (std::size_t ii = 0; ii < a; ++ii)
                for (double v : cells[ii][j]) col_mean += v;
            col_mean /= static_cast<double>(a * r);

            for (double v : cells[i][j]) {
                out.ss_total += (v - grand) * (v - grand);
                out.ss_error += (v - cell_mean) * (v - cell_mean);
                out.ss_a += (row_mean - grand) * (row_mean - grand);
                out.ss_b += (col_mean - grand) * (col_mean - grand);
                const double inter = cell_mean - row_mean - col_mean + grand;
                out.ss_ab += inter * inter;
            }
        }
    return out;
}

} // namespace

TEST_CASE("all-equal cells give zero F everywhere") {
    const Cells cells{{{2.0, 2.0}, {2.0, 2.0}}, {{2.0, 2.0}, {2.0, 2.0}}};
    const AnovaTable t = anova_two_way(cells);
    CHECK(t.f_a == 0.0);
    CHECK(t.f_b == 0.0);
    CHECK(t.f_ab == 0.0);
}

TEST_CASE("pure row effect matches the hand decomposition") {
    const Cells cells{{{1.0, 2.0}, {1.0, 2.0}}, {{3.0, 4.0}, {3.0, 4.0}}};
    const AnovaTable t = anova_two_way(cells);
    CHECK(t.f_b == 0.0);
    CHECK(t.f_ab == 0.0);
    // SS_a = 2*2*((1.5-2.5)^2 + (3.5-2.5)^2) = 8; SS_error = 8*0.25 = 2; MS_e = 2/4
    CHECK(t.ss_a == doctest::Approx(8.0));
    CHECK(t.ss_error == doctest::Approx(2.0));
    CHECK(t.dof_error == 4);
    CHECK(t.f_a == doctest::Approx((8.0 / 1.0) / (2.0 / 4.0)));
}

TEST_CASE("random balanced tables agree with the brute-force oracle") {
    RandomStream rng{606};
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t a = 2 + static_cast<std::size_t>(rng.uniform() * 3);
        const std::size_t b = 2 + static_cast<std::size_t>(rng.uniform() * 3);
        const std::size_t r = 2 + static_cast<std::size_t>(rng.uniform() * 4);
        Cells cells(a, std::vector<std::vector<double>>(b, std::vector<double>(r)));
        for (auto& row : cells)
            for (auto& cell : row)
                for (auto& v : cell) v = rng.uniform_in(-5, 5);

        const AnovaTable t = anova_two_way(cells);
        const OracleSS o = brute_force_ss(cells);
        CHECK(std::abs(t.ss_a - o.ss_a) < 1e-9);
        CHECK(std::abs(t.ss_b - o.ss_b) < 1e-9);
        CHECK(std::abs(t.ss_ab - o.ss_ab) < 1e-9);
        CHECK(std::abs(t.ss_error - o.ss_error) < 1e-9);
        CHECK(std::abs(t.ss_total - o.ss_total) < 1e-9);

        // additivity
        CHECK(std::abs(t.ss_total - (t.ss_a + t.ss_b + t.ss_ab + t.ss_error)) < 1e-9);
        CHECK(t.f_a >= 0.0);
        CHECK(t.f_b >= 0.0);
        CHECK(t.f_ab >= 0.0);
    }
}

TEST_CASE("additive data keeps the interaction F in the central band") {
    // No interaction term in the generator; across seeds the median F_ab of a
    // 2x2xN design should sit near the center of F(1, dof).
    RandomStream seeds{808};
    std::vector<double> f_ab;
    for (int s = 0; s < 1000; ++s) {
        RandomStream rng = seeds.split(static_cast<std::uint64_t>(s));
        Cells cells(2, std::vector<std::vector<double>>(2, std::vector<double>(6)));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (auto& v : cells[i][j])
                    v = 1.5 * static_cast<double>(i) - 0.7 * static_cast<double>(j) + rng.normal();
        f_ab.push_back(anova_two_way(cells).f_ab);
    }
    std::nth_element(f_ab.begin(), f_ab.begin() + 500, f_ab.end());
    const double median = f_ab[500];
    CHECK(median > 0.3);
    CHECK(median < 1.6);
}

TEST_CASE("design validation") {
    CHECK_THROWS_AS(anova_two_way({{{1, 2}, {1, 2}}}), std::invalid_argument); // one A level
    CHECK_THROWS_AS(anova_two_way({{{1, 2}}, {{1, 2}}}), std::invalid_argument); // one B level
    CHECK_THROWS_AS(anova_two_way({{{1}, {2}}, {{3}, {4}}}), std::invalid_argument); // one replicate
    const Cells unbalanced{{{1, 2}, {1, 2, 3}}, {{3, 4}, {3, 4}}};
    CHECK_THROWS_AS(anova_two_way(unbalanced), std::invalid_argument);
}
