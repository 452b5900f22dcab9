#include "dynkit/flock.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "dynkit/entropy.hpp"
#include "dynkit/errors.hpp"

namespace dynkit {

namespace {

constexpr double kDenominatorGuard = 1e-9;
constexpr std::uint64_t kSweepTag = 0x74696573ULL; // stream key for the ties sweep

double wrap_coord(double x, double lo, double hi) {
    const double span = hi - lo;
    double w = std::fmod(x - lo, span);
    if (w < 0.0) w += span;
    return lo + w;
}

/// Offset from a to b, nearest image under the boundary rule.
Vec2 offset(const Vec2& a, const Vec2& b, const FlockParams& p) {
    Vec2 diff = b - a;
    if (p.boundary == BoundaryRule::Wrap) {
        const double w = p.bounds.width();
        const double h = p.bounds.height();
        diff.x -= w * std::round(diff.x / w);
        diff.y -= h * std::round(diff.y / h);
    }
    return diff;
}

Vec2 apply_boundary(const Vec2& pos, const FlockParams& p) {
    if (p.boundary == BoundaryRule::Wrap)
        return {wrap_coord(pos.x, p.bounds.x0, p.bounds.x1),
                wrap_coord(pos.y, p.bounds.y0, p.bounds.y1)};
    return {std::clamp(pos.x, p.bounds.x0, p.bounds.x1),
            std::clamp(pos.y, p.bounds.y0, p.bounds.y1)};
}

/// Uniform-grid spatial index over the agent positions. Cell size >= E, so a
/// 3x3 block covers every neighbor within the vision radius. Candidates are
/// returned in ascending agent index, which keeps every downstream sum and
/// tie-break bit-identical to a plain O(M^2) scan.
class CellIndex {
public:
    CellIndex(const std::vector<AgentState>& agents, const FlockParams& p) : p_(p) {
        nx_ = std::max(1, static_cast<int>(std::floor(p.bounds.width() / p.e)));
        ny_ = std::max(1, static_cast<int>(std::floor(p.bounds.height() / p.e)));
        cells_.resize(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_));
        for (std::size_t j = 0; j < agents.size(); ++j)
            cells_[cell_of(agents[j].pos)].push_back(j);
    }

    /// Sorted candidate agent indices around pos (a superset of the
    /// within-E neighborhood).
    void candidates(const Vec2& pos, std::vector<std::size_t>& out) const {
        out.clear();
        const int cx = cell_x(pos.x);
        const int cy = cell_y(pos.y);
        int seen_x[3], seen_y[3];
        int n_x = 0, n_y = 0;
        for (int d = -1; d <= 1; ++d) {
            const int gx = wrap_cell(cx + d, nx_);
            if (std::find(seen_x, seen_x + n_x, gx) == seen_x + n_x) seen_x[n_x++] = gx;
            const int gy = wrap_cell(cy + d, ny_);
            if (std::find(seen_y, seen_y + n_y, gy) == seen_y + n_y) seen_y[n_y++] = gy;
        }
        for (int ix = 0; ix < n_x; ++ix)
            for (int iy = 0; iy < n_y; ++iy) {
                const auto& cell =
                    cells_[static_cast<std::size_t>(seen_y[iy]) * static_cast<std::size_t>(nx_) +
                           static_cast<std::size_t>(seen_x[ix])];
                out.insert(out.end(), cell.begin(), cell.end());
            }
        // cells hold ascending indices; concatenation is often already sorted
        if (!std::is_sorted(out.begin(), out.end())) std::sort(out.begin(), out.end());
    }

private:
    int cell_x(double x) const {
        const double rel = (x - p_.bounds.x0) / p_.bounds.width();
        return std::clamp(static_cast<int>(rel * nx_), 0, nx_ - 1);
    }
    int cell_y(double y) const {
        const double rel = (y - p_.bounds.y0) / p_.bounds.height();
        return std::clamp(static_cast<int>(rel * ny_), 0, ny_ - 1);
    }
    std::size_t cell_of(const Vec2& pos) const {
        return static_cast<std::size_t>(cell_y(pos.y)) * static_cast<std::size_t>(nx_) +
               static_cast<std::size_t>(cell_x(pos.x));
    }
    int wrap_cell(int c, int n) const {
        if (p_.boundary == BoundaryRule::Wrap) return ((c % n) + n) % n;
        return std::clamp(c, 0, n - 1);
    }

    const FlockParams& p_;
    int nx_{1}, ny_{1};
    std::vector<std::vector<std::size_t>> cells_;
};

std::vector<std::size_t> neighbors_within(const FlockState& flock, std::size_t index,
                                          const FlockParams& p, const CellIndex* idx = nullptr) {
    std::vector<std::size_t> out;
    const Vec2& here = flock.agents[index].pos;
    if (idx) {
        std::vector<std::size_t> cand;
        idx->candidates(here, cand);
        for (std::size_t j : cand)
            if (offset(here, flock.agents[j].pos, p).norm() <= p.e) out.push_back(j);
        return out;
    }
    for (std::size_t j = 0; j < flock.agents.size(); ++j) {
        if (offset(here, flock.agents[j].pos, p).norm() <= p.e) out.push_back(j);
    }
    return out;
}

/// Nearest neighbor within the vision radius; ties go to the lowest index.
std::ptrdiff_t nearest_neighbor(const FlockState& flock, std::size_t index, const FlockParams& p,
                                const CellIndex* idx = nullptr) {
    const Vec2& here = flock.agents[index].pos;
    std::ptrdiff_t best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    auto consider = [&](std::size_t j) {
        if (j == index) return;
        const double dist = offset(here, flock.agents[j].pos, p).norm();
        if (dist <= p.e && dist < best_dist) {
            best_dist = dist;
            best = static_cast<std::ptrdiff_t>(j);
        }
    };
    if (idx) {
        std::vector<std::size_t> cand;
        idx->candidates(here, cand);
        for (std::size_t j : cand) consider(j);
    } else {
        for (std::size_t j = 0; j < flock.agents.size(); ++j) consider(j);
    }
    return best;
}

FlockMetrics step_metrics(const std::vector<AgentState>& agents,
                          const std::vector<double>& displacements) {
    FlockMetrics m;
    const double n = static_cast<double>(agents.size());

    double mean_disp = 0.0;
    for (double d : displacements) mean_disp += d;
    mean_disp /= n;
    double var_disp = 0.0;
    for (double d : displacements) var_disp += (d - mean_disp) * (d - mean_disp);
    m.avg_displacement = mean_disp;
    m.sd_displacement = std::sqrt(var_disp / n);

    double mx = 0.0, my = 0.0;
    for (const auto& a : agents) {
        mx += a.pos.x;
        my += a.pos.y;
    }
    mx /= n;
    my /= n;
    double vx = 0.0, vy = 0.0;
    for (const auto& a : agents) {
        vx += (a.pos.x - mx) * (a.pos.x - mx);
        vy += (a.pos.y - my) * (a.pos.y - my);
    }
    vx /= n;
    vy /= n;
    m.cluster_var_min = std::min(vx, vy);
    m.cluster_var_max = std::max(vx, vy);

    std::vector<double> headings;
    headings.reserve(agents.size());
    for (const auto& a : agents) headings.push_back(std::atan2(a.vel.y, a.vel.x));
    m.entropy_bits = shannon_entropy(phase_histogram(headings).probs).h_bits;
    return m;
}

} // namespace

void validate(const FlockParams& p) {
    if (p.m < 2) throw std::invalid_argument("flock: m must be >= 2");
    if (!(p.k >= 0.0 && p.k <= 1.0)) throw std::invalid_argument("flock: k must lie in [0, 1]");
    if (p.mode == PayoffMode::PI3 && p.k > 0.5)
        throw std::invalid_argument("flock: PI3 requires k in [0, 0.5]");
    if (!(p.k_prime >= 0.0 && p.k_prime <= 1.0))
        throw std::invalid_argument("flock: k_prime must lie in [0, 1]");
    if (!(p.t_ties >= 0.1 && p.t_ties <= 0.9))
        throw std::invalid_argument("flock: t_ties must lie in [0.1, 0.9]");
    if (!(p.w > 0.0 && p.w <= 1.0)) throw std::invalid_argument("flock: w must lie in (0, 1]");
    if (!(p.omega_sel >= 0.0)) throw std::invalid_argument("flock: omega_sel must be >= 0");
    if (p.nodes != 0 && p.nodes < 2)
        throw std::invalid_argument("flock: nodes must be 0 (auto) or >= 2");
    if (!(p.e > 0.0)) throw std::invalid_argument("flock: vision radius e must be > 0");
    if (!(p.v >= 0.0)) throw std::invalid_argument("flock: speed v must be >= 0");
    if (!(p.d >= 0.0)) throw std::invalid_argument("flock: separation d must be >= 0");
    if (!(p.bounds.width() > 0.0 && p.bounds.height() > 0.0))
        throw std::invalid_argument("flock: bounds must have positive extent");
}

Vec2 group_heading(std::span<const AgentState> agents) {
    if (agents.empty()) throw std::invalid_argument("group_heading: empty agent list");
    Vec2 sum;
    for (const auto& a : agents) sum += a.vel;
    return sum * (1.0 / static_cast<double>(agents.size()));
}

Vec2 conditional_flip(const Vec2& v, const Vec2& v_avg) {
    if (!v.finite() || !v_avg.finite())
        throw std::invalid_argument("conditional_flip: non-finite input");
    return v.norm() > v_avg.norm() ? -v : v;
}

Vec2 tradeoff_update(const Vec2& v_i, const Vec2& v_avg, double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("tradeoff_update: k must lie in [0, 1]");
    return vec_combine(1.0 - k, v_i, k, v_avg);
}

double network_density(double t_ties, int n) {
    if (n < 2) throw std::invalid_argument("network_density: need n >= 2 nodes");
    if (!(t_ties >= 0.0)) throw std::invalid_argument("network_density: t_ties must be >= 0");
    const double ac = 2.0 * t_ties / n;
    const double pc = static_cast<double>(n) * (n - 1) / 2.0;
    return ac / pc;
}

double mutation_scalar(double k_prime, double v_s) {
    if (!(k_prime >= 0.0 && k_prime <= 1.0))
        throw std::invalid_argument("mutation_scalar: k_prime must lie in [0, 1]");
    return k_prime * (1.0 - v_s) - 2.0 * k_prime * v_s;
}

double index_of_difficulty(double k, double w) {
    if (!(k >= 0.0 && k <= 0.5))
        throw std::invalid_argument("index_of_difficulty: k must lie in [0, 0.5]");
    if (!(w > 0.0)) throw std::invalid_argument("index_of_difficulty: w must be > 0");
    return (1.0 - 2.0 * k) / w;
}

double fermi_probability(double delta_pi, double omega_sel) {
    if (!(omega_sel >= 0.0)) throw std::invalid_argument("fermi_probability: omega must be >= 0");
    const double x = omega_sel * delta_pi;
    if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double pursuit_step(double s_l, double alpha, double d) {
    if (!(d >= 0.0)) throw std::invalid_argument("pursuit_step: distance must be >= 0");
    return s_l + alpha * d * d;
}

namespace {

AgentState agent_update_impl(const FlockState& flock, std::size_t index, const FlockParams& params,
                             const Vec2& v_avg, const CellIndex* idx) {
    const AgentState& self = flock.agents[index];

    const auto hood = neighbors_within(flock, index, params, idx);
    Vec2 centroid_offset;
    for (std::size_t j : hood) centroid_offset += offset(self.pos, flock.agents[j].pos, params);
    centroid_offset = centroid_offset * (1.0 / static_cast<double>(hood.size()));
    const Vec2 b_i = centroid_offset.unit();

    const Vec2 u = v_avg + b_i;
    Vec2 bracket = tradeoff_update(self.vel, v_avg, params.k);

    if (params.mode != PayoffMode::PI1) {
        if (params.nodes < 2)
            throw std::invalid_argument(
                "agent_update: nodes unresolved; set params.nodes or use resolve_nodes");
        const double nd = network_density(params.t_ties, params.nodes);
        const double v_ss = mutation_scalar(params.k_prime, nd);
        if (params.mode == PayoffMode::PI2) {
            bracket += v_ss * self.vel.unit();
        } else { // PI3
            if (std::abs(v_ss) < kDenominatorGuard)
                throw DegenerateError("agent_update: PI3 mutation denominator below guard (|v_ss| < 1e-9)");
            bracket = bracket * (index_of_difficulty(params.k, params.w) / v_ss);
        }
    }

    AgentState next;
    next.vel = u + conditional_flip(bracket, v_avg);
    next.pos = apply_boundary(self.pos + next.vel, params);
    next.payoff = next.vel.norm();
    return next;
}

} // namespace

AgentState agent_update(const FlockState& flock, std::size_t index, const FlockParams& params) {
    return agent_update_impl(flock, index, params, group_heading(flock.agents), nullptr);
}

std::pair<AgentState, RandomStream> imitation_step(const AgentState& focal,
                                                   const AgentState& role,
                                                   const FlockParams& params,
                                                   RandomStream rng) {
    const double p = fermi_probability(role.payoff - focal.payoff, params.omega_sel);
    const double u = rng.uniform();
    AgentState next = focal;
    if (u < p) {
        next.vel = role.vel;
        next.payoff = next.vel.norm();
    }
    return {next, rng};
}

FlockState init_flock(const FlockParams& params, std::uint64_t seed) {
    validate(params);
    FlockState state;
    state.rng = RandomStream(seed);
    state.agents.resize(static_cast<std::size_t>(params.m));
    for (auto& a : state.agents) {
        a.pos.x = state.rng.uniform_in(params.bounds.x0, params.bounds.x1);
        a.pos.y = state.rng.uniform_in(params.bounds.y0, params.bounds.y1);
        const double angle = state.rng.uniform() * 2.0 * M_PI;
        a.vel = {params.v * std::cos(angle), params.v * std::sin(angle)};
        a.payoff = a.vel.norm();
    }
    return state;
}

int resolve_nodes(const FlockState& state, const FlockParams& params) {
    const CellIndex idx(state.agents, params);
    double mean_hood = 0.0;
    for (std::size_t i = 0; i < state.agents.size(); ++i)
        mean_hood += static_cast<double>(neighbors_within(state, i, params, &idx).size());
    mean_hood /= static_cast<double>(state.agents.size());
    const int rounded = static_cast<int>(std::llround(mean_hood));
    return std::clamp(rounded, 2, params.m);
}

FlockRun run_flock(const FlockParams& params, int steps, std::uint64_t seed) {
    if (steps < 1) throw std::invalid_argument("run_flock: steps must be >= 1");
    FlockState state = init_flock(params, seed);
    FlockParams eff = params;
    if (eff.nodes == 0 && eff.mode != PayoffMode::PI1) eff.nodes = resolve_nodes(state, params);

    FlockRun run;
    run.trajectory.reserve(static_cast<std::size_t>(steps));
    run.metrics.reserve(static_cast<std::size_t>(steps));

    std::vector<double> displacements(state.agents.size());
    for (int step = 1; step <= steps; ++step) {
        // Motion phase: every agent reads the previous state.
        FlockState next = state;
        next.step_index = step;
        const Vec2 v_avg = group_heading(state.agents);
        const CellIndex motion_idx(state.agents, eff);
        for (std::size_t i = 0; i < state.agents.size(); ++i) {
            try {
                next.agents[i] = agent_update_impl(state, i, eff, v_avg, &motion_idx);
            } catch (const DegenerateError& e) {
                throw DegenerateError(std::string(e.what()) + " [step " + std::to_string(step) +
                                      ", agent " + std::to_string(i) + "]");
            }
            // displacement of the position: nearest-image distance on the torus
            displacements[i] = offset(state.agents[i].pos, next.agents[i].pos, eff).norm();
        }

        // Imitation phase: each agent rolls against its nearest neighbor,
        // reading the post-motion snapshot so the order of agents is immaterial.
        const std::vector<AgentState> snapshot = next.agents;
        const CellIndex imitation_idx(snapshot, eff);
        RandomStream rng = next.rng;
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            const std::ptrdiff_t role = nearest_neighbor(next, i, eff, &imitation_idx);
            if (role < 0) continue;
            auto [updated, advanced] =
                imitation_step(snapshot[i], snapshot[static_cast<std::size_t>(role)], eff, rng);
            next.agents[i] = updated;
            rng = advanced;
        }
        next.rng = rng;

        run.metrics.push_back(step_metrics(next.agents, displacements));
        run.trajectory.push_back(next);
        state = std::move(next);
    }
    return run;
}

double alignment_order(std::span<const AgentState> agents) {
    if (agents.empty()) throw std::invalid_argument("alignment_order: empty agent list");
    Vec2 sum;
    for (const auto& a : agents) sum += a.vel.unit();
    return (sum * (1.0 / static_cast<double>(agents.size()))).norm();
}

DecayFit fit_exponential_decay(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_exponential_decay: length mismatch");

    std::vector<double> x, logy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] > 0.0) {
            x.push_back(xs[i]);
            logy.push_back(std::log(ys[i]));
        }
    }
    DecayFit fit;
    if (x.size() < 2) return fit;

    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += logy[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (logy[i] - my);
    }
    if (sxx == 0.0) return fit;

    const double slope = sxy / sxx;
    fit.rate = -slope;
    fit.amplitude = std::exp(my + slope * (x.front() - mx));
    fit.ok = true;
    return fit;
}

double steepest_grid_point(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("steepest_grid_point: need >= 2 equal-length points");
    double best = xs[0];
    double best_mag = -1.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = i + 1 == xs.size() ? i : i + 1;
        const double dx = xs[hi] - xs[lo];
        if (dx == 0.0) continue;
        const double mag = std::abs((ys[hi] - ys[lo]) / dx);
        if (mag > best_mag) {
            best_mag = mag;
            best = xs[i];
        }
    }
    return best;
}

std::uint64_t sweep_child_seed(std::uint64_t seed, std::size_t grid_index, std::size_t replicate) {
    return RandomStream(seed).split(kSweepTag).split(grid_index).split(replicate).state();
}

SweepReport sweep_social_ties(const FlockParams& params, std::span<const double> grid,
                              int steps, int replicates, std::uint64_t seed, int jobs) {
    if (grid.empty()) throw std::invalid_argument("sweep_social_ties: empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.1 && grid[i] <= 0.9))
            throw std::invalid_argument("sweep_social_ties: grid values must lie in [0.1, 0.9]");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("sweep_social_ties: grid must be sorted ascending");
    }
    if (replicates < 1) throw std::invalid_argument("sweep_social_ties: replicates must be >= 1");
    if (jobs < 1) jobs = 1;

    const std::size_t n_tasks = grid.size() * static_cast<std::size_t>(replicates);
    std::vector<double> run_disp(n_tasks, 0.0);

    auto run_task = [&](std::size_t task) {
        const std::size_t gi = task / static_cast<std::size_t>(replicates);
        const std::size_t rep = task % static_cast<std::size_t>(replicates);
        FlockParams local = params;
        local.t_ties = grid[gi];
        const FlockRun run = run_flock(local, steps, sweep_child_seed(seed, gi, rep));
        double mean = 0.0;
        for (const FlockMetrics& m : run.metrics) mean += m.avg_displacement;
        run_disp[task] = mean / static_cast<double>(run.metrics.size());
    };

    if (jobs == 1 || n_tasks == 1) {
        for (std::size_t t = 0; t < n_tasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (std::size_t t = cursor.fetch_add(1); t < n_tasks; t = cursor.fetch_add(1))
                run_task(t);
        };
        std::vector<std::thread> pool;
        const int n_threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n_tasks);
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepReport report;
    report.ties_grid.assign(grid.begin(), grid.end());
    report.metric_per_tie.resize(grid.size());
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        double sum = 0.0;
        for (int rep = 0; rep < replicates; ++rep)
            sum += run_disp[gi * static_cast<std::size_t>(replicates) + static_cast<std::size_t>(rep)];
        report.metric_per_tie[gi] = sum / replicates;
    }

    const auto [mn, mx] =
        std::minmax_element(report.metric_per_tie.begin(), report.metric_per_tie.end());
    if (*mx - *mn <= 1e-12 * std::max(1.0, std::abs(*mx))) {
        report.degenerate = true;
        report.decay_rate = 0.0;
        report.threshold_estimate = report.ties_grid.front();
        return report;
    }

    const std::size_t peak = static_cast<std::size_t>(
        std::max_element(report.metric_per_tie.begin(), report.metric_per_tie.end()) -
        report.metric_per_tie.begin());
    const std::span<const double> tail_x{report.ties_grid.data() + peak, grid.size() - peak};
    const std::span<const double> tail_y{report.metric_per_tie.data() + peak, grid.size() - peak};
    const DecayFit fit = fit_exponential_decay(tail_x, tail_y);
    if (fit.ok) {
        report.decay_rate = fit.rate;
    } else {
        report.decay_rate = 0.0;
        report.degenerate = true;
    }
    report.threshold_estimate = steepest_grid_point(report.ties_grid, report.metric_per_tie);
    return report;
}

} // namespace dynkit
