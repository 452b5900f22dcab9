#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dynkit/random.hpp"
#include "dynkit/vec2.hpp"

namespace dynkit {

/// The three velocity-update modes: plain trade-off, trade-off plus the
/// network mutation term, and trade-off scaled by difficulty over mutation.
enum class PayoffMode { PI1, PI2, PI3 };

enum class BoundaryRule { Wrap, Clamp };

struct Bounds {
    double x0{0.0}, y0{0.0};
    double x1{100.0}, y1{100.0};
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct FlockParams {
    int m{1000};            // population size, >= 2
    double d{1.0};          // separation distance (carried in configs; no update rule consumes it)
    double e{1.5};          // vision / exploration radius
    double v{1.0};          // initial speed
    double k{0.3};          // individual-group trade-off, [0, 1] ([0, 0.5] for PI3)
    double k_prime{0.9};    // mutation / exploration rate, [0, 1]
    double t_ties{0.5};     // social-ties scalar, [0.1, 0.9]
    double w{1.0};          // width ("size or reputation"), > 0
    double omega_sel{1.0};  // selection intensity, >= 0
    int nodes{0};           // network node count; 0 = resolve from the initial
                            // state as the rounded mean neighborhood size
    PayoffMode mode{PayoffMode::PI3};
    Bounds bounds{};
    BoundaryRule boundary{BoundaryRule::Wrap};
    friend bool operator==(const FlockParams&, const FlockParams&) = default;
};

void validate(const FlockParams& params);

struct AgentState {
    Vec2 pos;
    Vec2 vel;
    double payoff{0.0}; // current speed
};

struct FlockState {
    std::vector<AgentState> agents;
    int step_index{0};
    RandomStream rng;
};

struct FlockMetrics {
    double avg_displacement{0.0};
    double cluster_var_min{0.0};
    double cluster_var_max{0.0};
    double sd_displacement{0.0};
    double entropy_bits{0.0};
};

struct SweepReport {
    std::vector<double> ties_grid;
    std::vector<double> metric_per_tie;
    double decay_rate{0.0};
    double threshold_estimate{0.0};
    bool degenerate{false};
};

// --- elementary update ingredients -------------------------------------

/// Mean velocity of the population.
Vec2 group_heading(std::span<const AgentState> agents);

/// +v when ||v|| < ||v_avg||, -v when ||v|| > ||v_avg||; ties keep +v.
Vec2 conditional_flip(const Vec2& v, const Vec2& v_avg);

/// (1 - k) v_i + k v_avg.
Vec2 tradeoff_update(const Vec2& v_i, const Vec2& v_avg, double k);

/// Network density ND = AC / PC with AC = 2t/N and PC = N(N-1)/2.
double network_density(double t_ties, int n);

/// Mutation scalar k'(1 - v_s) - 2 k' v_s; changes sign at v_s = 1/3.
double mutation_scalar(double k_prime, double v_s);

/// Index of difficulty (1 - 2k) / W, defined for k in [0, 0.5].
double index_of_difficulty(double k, double w);

/// Imitation probability 1 / (1 + exp(-omega * delta_pi)); saturates cleanly.
double fermi_probability(double delta_pi, double omega_sel);

/// Pursuit displacement update S + alpha * d^2.
double pursuit_step(double s_l, double alpha, double d);

// --- agent-level and population-level stepping --------------------------

/// One synchronous velocity/position update for agents[index], reading only
/// the previous state. The mode bracket is built, conditionally flipped
/// against the group heading, and added to u = v_avg + b_i where b_i points
/// at the centroid of neighbors within radius E.
AgentState agent_update(const FlockState& flock, std::size_t index, const FlockParams& params);

/// Fermi imitation: with probability p = fermi(pi_role - pi_focal, omega) the
/// focal agent adopts the role agent's velocity; payoff is recomputed either
/// way. Consumes exactly one uniform draw.
std::pair<AgentState, RandomStream> imitation_step(const AgentState& focal,
                                                   const AgentState& role,
                                                   const FlockParams& params,
                                                   RandomStream rng);

/// Seeded initial population: positions uniform in bounds, headings uniform,
/// speeds equal to params.v.
FlockState init_flock(const FlockParams& params, std::uint64_t seed);

/// Network node count for params.nodes = 0: the mean neighborhood size
/// (within radius E, self included) over the given state, rounded and
/// clamped to [2, m]. run_flock resolves this once from the initial state.
int resolve_nodes(const FlockState& state, const FlockParams& params);

struct FlockRun {
    std::vector<FlockState> trajectory; // one snapshot per step
    std::vector<FlockMetrics> metrics;  // one record per step
};

/// Advance `steps` synchronous steps from a seeded initial state; imitation
/// against the nearest neighbor once per agent per step. Fully determined by
/// (params, steps, seed).
FlockRun run_flock(const FlockParams& params, int steps, std::uint64_t seed);

/// Alignment order parameter ||mean(unit(v_i))|| in [0, 1].
double alignment_order(std::span<const AgentState> agents);

// --- social-ties sweep ---------------------------------------------------

struct DecayFit {
    double rate{0.0};      // lambda in A exp(-lambda (x - x0))
    double amplitude{0.0}; // A at the first fitted point
    bool ok{false};
};

/// Least squares of ln(y) against x on the given points; non-positive y are
/// excluded. ok is false when fewer than two usable points remain or the
/// values are all equal.
DecayFit fit_exponential_decay(std::span<const double> xs, std::span<const double> ys);

/// Grid point with the largest |discrete derivative| (central differences
/// inside, one-sided at the ends).
double steepest_grid_point(std::span<const double> xs, std::span<const double> ys);

/// Seed of the (grid index, replicate) substream used by sweeps. Pinned so
/// any sweep cell can be reproduced as a standalone run.
std::uint64_t sweep_child_seed(std::uint64_t seed, std::size_t grid_index, std::size_t replicate);

/// Mean avg_displacement (averaged over the run, then over seeded
/// replicates) per grid point, with an exponential-decay fit of the
/// post-peak region and a threshold estimate. `jobs` > 1 runs replicates
/// concurrently; output is identical regardless of parallelism.
SweepReport sweep_social_ties(const FlockParams& params, std::span<const double> grid,
                              int steps, int replicates, std::uint64_t seed, int jobs = 1);

} // namespace dynkit
