#pragma once

#include <cstdint>
#include <vector>

#include "dynkit/circadian.hpp"
#include "dynkit/hkb.hpp"

namespace dynkit {

enum class Condition { Normal, Heat, Ice };

const char* condition_name(Condition c);

/// Trial layout of a synthetic coordination experiment: participants swing
/// at each circadian point for a fixed number of trials.
struct ExperimentDesign {
    std::vector<double> circadian_points{5.0, 12.0, 17.0, 0.0}; // hours, normalized into [0, 24)
    int participants{8};
    int trials_per_point{6};
    Condition condition{Condition::Normal};
    double duration_s{60.0};
    double dt{0.005};
    friend bool operator==(const ExperimentDesign&, const ExperimentDesign&) = default;
};

void validate(const ExperimentDesign& design);

struct TrialRecord {
    int participant{0};   // 1-based
    double hour{0.0};
    int trial{0};         // 1-based
    double q_effective{0.0};
    double detuning{0.0};
    PhaseSeries series;
};

/// Generate every trial of the design from the phase dynamics.
///
/// Per (participant, point, trial): the condition offset (NORMAL 0,
/// HEAT +vest_offset, ICE -vest_offset) sets eps against the baseline
/// temperature at that hour; (c, d) and the effective noise follow the
/// protocol's gain mapping; each participant carries a detuning jitter drawn
/// uniformly from +-0.1 rad/s out of their own substream. Series are
/// integrated for duration_s at dt from phi0 = 0 and assembled in
/// (participant, point, trial) order, fully determined by (design, seed).
std::vector<TrialRecord> synthetic_experiment(const ExperimentDesign& design,
                                              const HkbParams& base,
                                              const TemperatureProtocol& proto,
                                              std::uint64_t seed);

/// Condition offset in Celsius applied on top of T0.
double condition_offset(Condition c, const TemperatureProtocol& proto);

} // namespace dynkit
