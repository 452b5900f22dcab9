#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynkit/experiment.hpp"
#include "dynkit/flock.hpp"
#include "dynkit/hkb.hpp"

namespace dynkit {

enum class Command { Flock, Hkb, Experiment, Entropy, Chaos, Sweep };
enum class OutputFormat { Csv, Json };

const char* command_name(Command c);

struct FlockBlock {
    FlockParams params;
    int steps{100};
    friend bool operator==(const FlockBlock&, const FlockBlock&) = default;
};

struct HkbBlock {
    HkbParams params;
    double phi0{0.3};
    double dt{0.005};
    int steps{12000};
    friend bool operator==(const HkbBlock&, const HkbBlock&) = default;
};

struct ExperimentBlock {
    ExperimentDesign design;
    HkbParams base{1.0, 1.0, 0.0, 0.05, 0.0, 0.1};
    TemperatureProtocol protocol;
    bool emit_series{false};
    friend bool operator==(const ExperimentBlock&, const ExperimentBlock&) = default;
};

struct EntropyBlock {
    std::vector<double> probs;
    bool renormalize{false};
    std::string input_csv;
    int bins{36};
    friend bool operator==(const EntropyBlock&, const EntropyBlock&) = default;
};

struct ChaosBlock {
    std::vector<double> r_grid{2.5, 3.2, 3.9, 4.0};
    double x0{0.3};
    std::int64_t iterates{1000000};
    std::int64_t burn_in{1000};
    double epsilon0{1e-9};
    std::int64_t divergence_steps{60};
    friend bool operator==(const ChaosBlock&, const ChaosBlock&) = default;
};

struct SweepBlock {
    std::string axis{"t_ties"};
    std::vector<double> grid{0.50, 0.51, 0.52, 0.53, 0.54, 0.55,
                             0.56, 0.57, 0.58, 0.59, 0.60};
    int replicates{8};
    friend bool operator==(const SweepBlock&, const SweepBlock&) = default;
};

/// A fully seeded experiment description. One command block is active; the
/// flock block also feeds the sweep command.
struct RunConfig {
    Command command{Command::Flock};
    std::uint64_t seed{1};
    std::string output_dir{"out"};
    OutputFormat format{OutputFormat::Csv};
    int jobs{1};
    FlockBlock flock;
    HkbBlock hkb;
    ExperimentBlock experiment;
    EntropyBlock entropy;
    ChaosBlock chaos;
    SweepBlock sweep;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parse and validate a JSON config document. Unknown keys, type mismatches
/// and out-of-range values raise ConfigError naming the key and constraint.
/// Omitted fields take the documented defaults.
RunConfig parse_config(const std::string& json_text);

/// Canonical JSON rendering (sorted keys, active command block only).
/// parse_config(serialize_config(cfg)) == cfg.
std::string serialize_config(const RunConfig& cfg);

} // namespace dynkit
