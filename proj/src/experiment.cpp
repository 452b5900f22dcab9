#include "dynkit/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dynkit/errors.hpp"

namespace dynkit {

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::Normal: return "NORMAL";
        case Condition::Heat: return "HEAT";
        case Condition::Ice: return "ICE";
    }
    return "?";
}

double condition_offset(Condition c, const TemperatureProtocol& proto) {
    switch (c) {
        case Condition::Normal: return 0.0;
        case Condition::Heat: return proto.vest_offset;
        case Condition::Ice: return -proto.vest_offset;
    }
    return 0.0;
}

void validate(const ExperimentDesign& design) {
    if (design.circadian_points.empty())
        throw std::invalid_argument("experiment: need at least one circadian point");
    for (double h : design.circadian_points)
        if (!std::isfinite(h)) throw std::invalid_argument("experiment: non-finite circadian hour");
    if (design.participants < 1) throw std::invalid_argument("experiment: participants must be >= 1");
    if (design.trials_per_point < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (!(design.duration_s > 0.0)) throw std::invalid_argument("experiment: duration must be > 0");
    if (!(design.dt > 0.0)) throw std::invalid_argument("experiment: dt must be > 0");
}

std::vector<TrialRecord> synthetic_experiment(const ExperimentDesign& design,
                                              const HkbParams& base,
                                              const TemperatureProtocol& proto,
                                              std::uint64_t seed) {
    validate(design);

    const auto steps = static_cast<int>(std::llround(design.duration_s / design.dt));
    if (steps < 1) throw std::invalid_argument("experiment: duration shorter than one dt step");
    const double offset = condition_offset(design.condition, proto);
    const RandomStream root{seed};

    std::vector<TrialRecord> records;
    records.reserve(static_cast<std::size_t>(design.participants) *
                    design.circadian_points.size() *
                    static_cast<std::size_t>(design.trials_per_point));

    for (int p = 1; p <= design.participants; ++p) {
        // Per-participant frequency detuning jitter, one draw per participant.
        RandomStream pstream = root.split(static_cast<std::uint64_t>(p));
        const double jitter = pstream.uniform_in(-0.1, 0.1);

        for (std::size_t hi = 0; hi < design.circadian_points.size(); ++hi) {
            double hour = std::fmod(design.circadian_points[hi], 24.0);
            if (hour < 0.0) hour += 24.0;

            const double t0 = circadian_t0(hour, proto);
            const double eps = epsilon(t0 + offset, t0);
            const auto [c, d] = thermo_coefficients(eps, base.c, base.d, proto);

            HkbParams params = base;
            params.c = c;
            params.d = d;
            params.delta_omega = base.delta_omega + jitter;
            params.q = effective_noise(base.q, hour, eps, proto);

            for (int t = 1; t <= design.trials_per_point; ++t) {
                RandomStream trial_rng = root.split(static_cast<std::uint64_t>(p))
                                             .split(hi)
                                             .split(static_cast<std::uint64_t>(t));
                TrialRecord rec;
                rec.participant = p;
                rec.hour = hour;
                rec.trial = t;
                rec.q_effective = params.q;
                rec.detuning = params.delta_omega;
                try {
                    rec.series = integrate_phase(params, 0.0, design.dt, steps, trial_rng);
                } catch (const IntegrationError& e) {
                    throw IntegrationError(std::string(e.what()) + " [participant " +
                                           std::to_string(p) + ", hour " + std::to_string(hour) +
                                           ", trial " + std::to_string(t) + "]");
                }
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

} // namespace dynkit
