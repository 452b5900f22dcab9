#include "dynkit/anova.hpp"

#include <limits>
#include <stdexcept>

namespace dynkit {

AnovaTable anova_two_way(const std::vector<std::vector<std::vector<double>>>& cells) {
    const std::size_t a = cells.size();
    if (a < 2) throw std::invalid_argument("anova_two_way: need >= 2 levels of factor A");
    const std::size_t b = cells.front().size();
    if (b < 2) throw std::invalid_argument("anova_two_way: need >= 2 levels of factor B");

    std::size_t reps = 0;
    for (const auto& row : cells) {
        if (row.size() != b) throw std::invalid_argument("anova_two_way: ragged factor-B levels");
        for (const auto& cell : row) {
            if (reps == 0) reps = cell.size();
            if (cell.size() != reps)
                throw std::invalid_argument("anova_two_way: unbalanced design (unequal replicates)");
        }
    }
    if (reps < 2) throw std::invalid_argument("anova_two_way: need >= 2 replicates per cell");

    const double an = static_cast<double>(a);
    const double bn = static_cast<double>(b);
    const double rn = static_cast<double>(reps);
    const double total_n = an * bn * rn;

    double grand = 0.0;
    std::vector<double> mean_a(a, 0.0), mean_b(b, 0.0);
    std::vector<std::vector<double>> cell_mean(a, std::vector<double>(b, 0.0));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) {
            double s = 0.0;
            for (double v : cells[i][j]) s += v;
            cell_mean[i][j] = s / rn;
            mean_a[i] += s;
            mean_b[j] += s;
            grand += s;
        }
    grand /= total_n;
    for (auto& m : mean_a) m /= bn * rn;
    for (auto& m : mean_b) m /= an * rn;

    AnovaTable t;
    for (std::size_t i = 0; i < a; ++i) {
        const double d = mean_a[i] - grand;
        t.ss_a += bn * rn * d * d;
    }
    for (std::size_t j = 0; j < b; ++j) {
        const double d = mean_b[j] - grand;
        t.ss_b += an * rn * d * d;
    }
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) {
            const double d = cell_mean[i][j] - mean_a[i] - mean_b[j] + grand;
            t.ss_ab += rn * d * d;
            for (double v : cells[i][j]) {
                const double e = v - cell_mean[i][j];
                t.ss_error += e * e;
                const double g = v - grand;
                t.ss_total += g * g;
            }
        }

    t.dof_a = static_cast<int>(a) - 1;
    t.dof_b = static_cast<int>(b) - 1;
    t.dof_ab = t.dof_a * t.dof_b;
    t.dof_error = static_cast<int>(a * b * (reps - 1));

    const double ms_error = t.ss_error / t.dof_error;
    auto f_stat = [ms_error](double ss, int dof) {
        if (ss <= 0.0) return 0.0; // no effect variance, F = 0 even when MS_error = 0
        const double ms = ss / dof;
        return ms_error > 0.0 ? ms / ms_error : std::numeric_limits<double>::infinity();
    };
    t.f_a = f_stat(t.ss_a, t.dof_a);
    t.f_b = f_stat(t.ss_b, t.dof_b);
    t.f_ab = f_stat(t.ss_ab, t.dof_ab);
    return t;
}

} // namespace dynkit
