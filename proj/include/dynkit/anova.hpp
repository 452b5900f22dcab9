#pragma once

#include <vector>

namespace dynkit {

struct AnovaTable {
    double f_a{0.0};
    double f_b{0.0};
    double f_ab{0.0};
    int dof_a{0}, dof_b{0}, dof_ab{0}, dof_error{0};
    double ss_a{0.0}, ss_b{0.0}, ss_ab{0.0}, ss_error{0.0}, ss_total{0.0};
};

/// Fixed-effects two-way ANOVA with interaction on a balanced design.
///
/// cells[i][j] holds the replicate values for factor-A level i and factor-B
/// level j. Requires >= 2 levels per factor and the same replicate count
/// (>= 2) in every cell; unbalanced input is rejected. F statistics are 0
/// when the corresponding sum of squares is 0.
AnovaTable anova_two_way(const std::vector<std::vector<std::vector<double>>>& cells);

} // namespace dynkit
