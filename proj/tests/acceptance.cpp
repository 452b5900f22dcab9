// Acceptance suite: one line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dynkit/anova.hpp"
#include "dynkit/chaos.hpp"
#include "dynkit/circadian.hpp"
#include "dynkit/circular.hpp"
#include "dynkit/config.hpp"
#include "dynkit/entropy.hpp"
#include "dynkit/experiment.hpp"
#include "dynkit/flock.hpp"
#include "dynkit/hkb.hpp"
#include "dynkit/manifest.hpp"
#include "dynkit/random.hpp"
#include "dynkit/runner.hpp"
#include "dynkit/spring.hpp"
#include "dynkit/vec2.hpp"
#include "support/flock_reference.hpp"

using namespace dynkit;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass{false};
    std::string detail;
    double ms{0.0};
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double trial_entropy(const PhaseSeries& series) {
    std::vector<double> wrapped(series.samples.size());
    std::transform(series.samples.begin(), series.samples.end(), wrapped.begin(), wrap_phase);
    return shannon_entropy(phase_histogram(wrapped).probs).h_bits;
}

double mean_entropy_at(const std::vector<TrialRecord>& records, double hour) {
    double sum = 0.0;
    int n = 0;
    for (const auto& rec : records)
        if (rec.hour == hour) {
            sum += trial_entropy(rec.series);
            ++n;
        }
    return n ? sum / n : 0.0;
}

// --- criteria ------------------------------------------------------------

Criterion c1_entropy_examples() {
    Criterion c{1, "entropy worked examples"};
    const auto t0 = Clock::now();
    const double h1 = shannon_entropy(std::vector<double>{0.5, 0.5}).h_bits;
    const double h2 = shannon_entropy(std::vector<double>{0.75, 0.25}).h_bits;
    const double h3 = shannon_entropy(std::vector<double>{0.1, 0.1, 0.1, 0.5, 0.1, 0.1}).h_bits;
    const double h4 = shannon_entropy(std::vector<double>(6, 0.16)).h_bits;
    c.ms = ms_since(t0);
    const bool values = h1 == 1.0 && std::abs(h2 - 0.8113) < 5e-4 &&
                        std::abs(h3 - 2.1610) < 1e-3 && std::abs(h4 - 2.5381) < 1e-3;
    c.pass = values && c.ms < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "H={%.6f, %.6f, %.6f, %.6f}", h1, h2, h3, h4);
    c.detail = buf;
    return c;
}

Criterion c2_vector_arithmetic() {
    Criterion c{2, "vector arithmetic"};
    const auto t0 = Clock::now();
    const Vec2 sum = vec_combine(1, {4, 1}, 1, {1, 2});
    const Vec2 diff = vec_combine(1, {4, 1}, -1, {1, 2});
    c.ms = ms_since(t0);
    c.pass = sum == Vec2{5, 3} && diff == Vec2{3, -1};
    c.detail = "(4,1)+(1,2)=(5,3); (4,1)-(1,2)=(3,-1)";
    return c;
}

Criterion c3_index_of_difficulty() {
    Criterion c{3, "index of difficulty"};
    const auto t0 = Clock::now();
    const double a = index_of_difficulty(0.1, 1.0);
    const double b = index_of_difficulty(0.4, 1.0);
    c.ms = ms_since(t0);
    // 1 - 2*0.4 lands one ulp off the decimal literal; allow representation error only
    c.pass = a == 0.8 && std::abs(b - 0.2) < 1e-16;
    char buf[80];
    std::snprintf(buf, sizeof(buf), "id(0.1,1)=%.17g id(0.4,1)=%.17g", a, b);
    c.detail = buf;
    return c;
}

Criterion c4_hkb_structure() {
    Criterion c{4, "HKB drift/potential structure"};
    const auto t0 = Clock::now();

    bool gradient_ok = true;
    RandomStream rng{4040};
    for (int i = 0; i < 100; ++i) {
        HkbParams p;
        p.a = rng.uniform_in(0.2, 2.0);
        p.b = rng.uniform_in(0.0, 2.0);
        p.delta_omega = rng.uniform_in(-0.5, 0.5);
        const double phi = rng.uniform_in(-M_PI, M_PI);
        const double h = 1e-6;
        const double grad = (hkb_potential(phi + h, p.a, p.b) - hkb_potential(phi - h, p.a, p.b)) / (2 * h);
        if (std::abs(hkb_drift(phi, p) - (p.delta_omega - grad)) >= 1e-6) gradient_ok = false;
    }

    const HkbParams sym{1, 1, 0, 0, 0, 0};
    bool roots_ok = false;
    {
        bool zero = false, pi = false;
        for (const auto& fp : fixed_points(sym)) {
            if (std::abs(hkb_drift(fp.phi, sym)) >= 1e-9) continue;
            if (std::abs(fp.phi) < 1e-8 && fp.stable) zero = true;
            if (std::abs(fp.phi + M_PI) < 1e-8 && fp.stable) pi = true;
        }
        roots_ok = zero && pi;
    }

    auto pi_stable = [](double b) {
        for (const auto& fp : fixed_points({1, b, 0, 0, 0, 0}))
            if (std::abs(fp.phi + M_PI) < 1e-6) return fp.stable;
        return false;
    };
    double lo = 0.05, hi = 0.6;
    bool boundary_ok = !pi_stable(lo) && pi_stable(hi);
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        (pi_stable(mid) ? hi : lo) = mid;
    }
    const double flip = 0.5 * (lo + hi);
    boundary_ok = boundary_ok && std::abs(flip - 0.25) <= 0.02;

    c.ms = ms_since(t0);
    c.pass = gradient_ok && roots_ok && boundary_ok && c.ms < 1000.0;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "grad %s, roots {0,pi} %s, boundary b/a=%.4f",
                  gradient_ok ? "ok" : "BAD", roots_ok ? "ok" : "BAD", flip);
    c.detail = buf;
    return c;
}

Criterion c5_spring_closed_form() {
    Criterion c{5, "damped spring vs closed form"};
    const auto t0 = Clock::now();
    const SpringParams p{1.0, 2.0, 1.0 + 4.0 * M_PI * M_PI};
    const double dt = 1e-4;
    const int n = 50000;
    const SpringSeries series = simulate_spring(p, 1.0, -1.0, dt, n);
    double max_err = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double t = dt * i;
        const double exact = std::exp(-t) * std::cos(2.0 * M_PI * t);
        max_err = std::max(max_err, std::abs(series.x[static_cast<std::size_t>(i)] - exact));
    }
    c.ms = ms_since(t0);
    c.pass = max_err < 1e-3 && c.ms < 5000.0;
    char buf[80];
    std::snprintf(buf, sizeof(buf), "max |x - exp(-t)cos(2pi t)| = %.3g", max_err);
    c.detail = buf;
    return c;
}

Criterion c6_lyapunov() {
    Criterion c{6, "Lyapunov exponents"};
    const auto t0 = Clock::now();

    const auto t_r4 = Clock::now();
    const double l4 = lyapunov({4.0}, 0.3, 1000000).lambda;
    const double ms4 = ms_since(t_r4);
    const auto t_r25 = Clock::now();
    const double l25 = lyapunov({2.5}, 0.3, 1000000).lambda;
    const double ms25 = ms_since(t_r25);

    bool signs_ok = true;
    for (double r : {2.5, 3.2, 3.9, 4.0}) {
        const double lambda = lyapunov({r}, 0.3123, 300000).lambda;
        const auto trace = orbit_divergence({r}, 0.3123, 1e-9, 60);
        bool macroscopic = false;
        for (double d : trace.distances)
            if (d > 0.01) macroscopic = true;
        const bool contracts = trace.distances.back() < trace.epsilon0;
        if (lambda < 0 && !contracts) signs_ok = false;
        if (lambda > 0 && !macroscopic) signs_ok = false;
    }

    c.ms = ms_since(t0);
    c.pass = std::abs(l4 - 0.6931) < 0.01 && std::abs(l25 + 0.6931) < 0.01 && ms4 < 1000.0 &&
             ms25 < 1000.0 && signs_ok;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "lambda(4)=%.4f lambda(2.5)=%.4f signs %s", l4, l25,
                  signs_ok ? "ok" : "BAD");
    c.detail = buf;
    return c;
}

Criterion c7_fermi() {
    Criterion c{7, "Fermi rule"};
    const auto t0 = Clock::now();

    const bool half = fermi_probability(0.0, 2.7) == 0.5;

    bool symmetry = true;
    RandomStream rng{7070};
    for (int i = 0; i < 10000; ++i) {
        const double omega = rng.uniform_in(0, 10);
        const double dpi = rng.uniform_in(-25, 25);
        if (std::abs(fermi_probability(dpi, omega) + fermi_probability(-dpi, omega) - 1.0) >= 1e-12)
            symmetry = false;
    }

    FlockParams p;
    p.m = 2;
    p.omega_sel = 5.0;
    AgentState focal, role;
    focal.vel = {1, 0};
    focal.payoff = 1.0;
    role.vel = {0, 2};
    role.payoff = 2.0;
    RandomStream coin{9090};
    int adopted = 0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        auto [next, advanced] = imitation_step(focal, role, p, coin);
        coin = advanced;
        if (next.vel == role.vel) ++adopted;
    }
    const double freq = adopted / static_cast<double>(trials);
    const double expected = fermi_probability(1.0, 5.0);
    const bool mc_ok = std::abs(freq - expected) < 0.01;

    c.ms = ms_since(t0);
    c.pass = half && symmetry && mc_ok;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "p(0)=0.5 %s, symmetry %s, MC %.4f vs %.4f",
                  half ? "ok" : "BAD", symmetry ? "ok" : "BAD", freq, expected);
    c.detail = buf;
    return c;
}

Criterion c8_flock_determinism_and_oracle() {
    Criterion c{8, "flock determinism + single-step oracle + alignment"};
    const auto t0 = Clock::now();

    // byte-identical CSV: same config twice, serial vs parallel sweep
    const std::string text = R"({"command": "sweep", "seed": 4242,
        "flock": {"m": 10, "e": 6.0, "v": 1.0, "k": 0.2, "k_prime": 0.4,
                   "bounds": [0, 0, 25, 25], "steps": 15},
        "sweep": {"axis": "t_ties", "grid": [0.3, 0.5, 0.7], "replicates": 4}})";
    const fs::path base = fs::temp_directory_path() / "dynkit_acceptance";
    fs::remove_all(base);
    fs::create_directories(base);

    RunConfig serial = parse_config(text);
    serial.output_dir = (base / "serial").string();
    serial.jobs = 1;
    run_command(serial);
    RunConfig parallel = parse_config(text);
    parallel.output_dir = (base / "parallel").string();
    parallel.jobs = 8;
    run_command(parallel);
    const bool bytes_ok =
        slurp(base / "serial" / "sweep_runs.csv") == slurp(base / "parallel" / "sweep_runs.csv") &&
        !slurp(base / "serial" / "sweep_runs.csv").empty();

    // independent single-step oracle on a hand-built 3-agent state
    FlockParams p;
    p.m = 3;
    p.e = 10.0;
    p.k = 0.3;
    p.k_prime = 0.4;
    p.t_ties = 0.5;
    p.omega_sel = 1.0;
    p.nodes = 3;
    p.mode = PayoffMode::PI2;
    p.bounds = {0, 0, 20, 20};

    FlockState state;
    state.rng = RandomStream{42};
    state.agents.resize(3);
    state.agents[0] = {{2.0, 3.0}, {1.0, 0.5}, 0.0};
    state.agents[1] = {{4.0, 3.5}, {-0.5, 1.0}, 0.0};
    state.agents[2] = {{3.0, 6.0}, {0.25, -1.25}, 0.0};
    for (auto& a : state.agents) a.payoff = a.vel.norm();

    std::vector<flock_reference::Agent> ref(3);
    for (std::size_t i = 0; i < 3; ++i)
        ref[i] = {state.agents[i].pos.x, state.agents[i].pos.y, state.agents[i].vel.x,
                  state.agents[i].vel.y, state.agents[i].payoff};
    RandomStream ref_rng = state.rng;
    const auto expected = flock_reference::step(ref, p, ref_rng);

    std::vector<AgentState> moved(3);
    for (std::size_t i = 0; i < 3; ++i) moved[i] = agent_update(state, i, p);
    RandomStream rng = state.rng;
    std::vector<AgentState> stepped = moved;
    for (std::size_t i = 0; i < 3; ++i) {
        std::ptrdiff_t role = -1;
        double best = 1e300;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == i) continue;
            const double dist = (moved[j].pos - moved[i].pos).norm();
            if (dist <= p.e && dist < best) {
                best = dist;
                role = static_cast<std::ptrdiff_t>(j);
            }
        }
        if (role < 0) continue;
        auto [next, advanced] = imitation_step(moved[i], moved[static_cast<std::size_t>(role)], p, rng);
        stepped[i] = next;
        rng = advanced;
    }
    double max_dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        max_dev = std::max(max_dev, std::abs(stepped[i].pos.x - expected[i].px));
        max_dev = std::max(max_dev, std::abs(stepped[i].pos.y - expected[i].py));
        max_dev = std::max(max_dev, std::abs(stepped[i].vel.x - expected[i].vx));
        max_dev = std::max(max_dev, std::abs(stepped[i].vel.y - expected[i].vy));
        max_dev = std::max(max_dev, std::abs(stepped[i].payoff - expected[i].payoff));
    }
    const bool oracle_ok = max_dev < 1e-12;

    // full coupling alignment
    FlockParams align;
    align.m = 50;
    align.k = 1.0;
    align.mode = PayoffMode::PI1;
    align.omega_sel = 0.0;
    align.e = 8.0;
    align.v = 1.0;
    align.bounds = {0, 0, 40, 40};
    const FlockRun run = run_flock(align, 10, 21);
    const double order = alignment_order(run.trajectory.back().agents);
    const bool align_ok = order >= 0.99;

    c.ms = ms_since(t0);
    c.pass = bytes_ok && oracle_ok && align_ok;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "bytes %s, oracle dev %.2g, alignment %.4f",
                  bytes_ok ? "ok" : "BAD", max_dev, order);
    c.detail = buf;
    return c;
}

Criterion c9_social_ties_sweep() {
    Criterion c{9, "social-ties sweep"};
    const auto t0 = Clock::now();

    // synthetic exponential input for the fit
    std::vector<double> xs, ys;
    for (int i = 0; i <= 8; ++i) {
        const double x = 0.5 + 0.05 * i;
        xs.push_back(x);
        ys.push_back(std::exp(-3.0 * (x - 0.5)));
    }
    const DecayFit fit = fit_exponential_decay(xs, ys);
    const bool fit_ok = fit.ok && std::abs(fit.rate - 3.0) / 3.0 < 0.05;

    // default-parameter sweep across the sensitivity band
    const FlockParams p; // documented defaults
    std::vector<double> grid;
    for (int i = 0; i <= 12; ++i) grid.push_back((30 + 5 * i) / 100.0);
    const SweepReport report = sweep_social_ties(p, grid, 60, 4, 20260810, 8);
    const bool threshold_ok =
        report.threshold_estimate >= 0.50 && report.threshold_estimate <= 0.60;

    c.ms = ms_since(t0);
    c.pass = fit_ok && threshold_ok;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "fit rate %.3f, threshold %.3f", fit.rate,
                  report.threshold_estimate);
    c.detail = buf;
    return c;
}

Criterion c10_circadian_direction() {
    Criterion c{10, "synthetic circadian experiment direction"};
    const auto t0 = Clock::now();

    ExperimentDesign design;
    design.circadian_points = {5.0, 17.0};
    design.participants = 8;
    design.trials_per_point = 6;
    design.duration_s = 60.0;
    design.dt = 0.005;
    const HkbParams base{1, 1, 0, 0.05, 0, 0.1};
    const TemperatureProtocol proto;

    int dawn_higher = 0;
    for (int r = 0; r < 100; ++r) {
        design.condition = Condition::Normal;
        const auto records = synthetic_experiment(design, base, proto, 1000 + static_cast<std::uint64_t>(r));
        if (mean_entropy_at(records, 5.0) > mean_entropy_at(records, 17.0)) ++dawn_higher;
    }
    const bool circadian_ok = dawn_higher >= 95;

    // vest direction: entropy up at dawn, down at dusk, for both vests
    bool vest_ok = true;
    double d5h = 0, d17h = 0, d5i = 0, d17i = 0;
    {
        const int reps = 30;
        double n5 = 0, n17 = 0, h5 = 0, h17 = 0, i5 = 0, i17 = 0;
        for (int r = 0; r < reps; ++r) {
            const auto seed = 5000 + static_cast<std::uint64_t>(r);
            design.condition = Condition::Normal;
            const auto normal = synthetic_experiment(design, base, proto, seed);
            design.condition = Condition::Heat;
            const auto heat = synthetic_experiment(design, base, proto, seed);
            design.condition = Condition::Ice;
            const auto ice = synthetic_experiment(design, base, proto, seed);
            n5 += mean_entropy_at(normal, 5.0);
            n17 += mean_entropy_at(normal, 17.0);
            h5 += mean_entropy_at(heat, 5.0);
            h17 += mean_entropy_at(heat, 17.0);
            i5 += mean_entropy_at(ice, 5.0);
            i17 += mean_entropy_at(ice, 17.0);
        }
        d5h = (h5 - n5) / reps;
        d17h = (h17 - n17) / reps;
        d5i = (i5 - n5) / reps;
        d17i = (i17 - n17) / reps;
        vest_ok = d5h > 0 && d17h < 0 && d5i > 0 && d17i < 0;
    }

    c.ms = ms_since(t0);
    c.pass = circadian_ok && vest_ok && c.ms < 120000.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "H(5)>H(17) in %d/100; vest dH: heat(+%.3f@5, %.3f@17) ice(+%.3f@5, %.3f@17)",
                  dawn_higher, d5h, d17h, d5i, d17i);
    c.detail = buf;
    return c;
}

Criterion c11_anova() {
    Criterion c{11, "two-way ANOVA"};
    const auto t0 = Clock::now();

    using Cells = std::vector<std::vector<std::vector<double>>>;
    const Cells equal{{{3.0, 3.0}, {3.0, 3.0}}, {{3.0, 3.0}, {3.0, 3.0}}};
    const AnovaTable t_eq = anova_two_way(equal);
    const bool zeros_ok = t_eq.f_a == 0 && t_eq.f_b == 0 && t_eq.f_ab == 0;

    bool oracle_ok = true;
    bool additivity_ok = true;
    RandomStream rng{1111};
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t reps = 2 + static_cast<std::size_t>(rng.uniform() * 5);
        Cells cells(2, std::vector<std::vector<double>>(2, std::vector<double>(reps)));
        for (auto& row : cells)
            for (auto& cell : row)
                for (auto& v : cell) v = rng.uniform_in(-10, 10);
        const AnovaTable t = anova_two_way(cells);

        // independent decomposition: explicit deviations from means
        double grand = 0.0;
        for (const auto& row : cells)
            for (const auto& cell : row)
                for (double v : cell) grand += v;
        grand /= static_cast<double>(4 * reps);
        double ma[2], mb[2], cm[2][2];
        for (int i = 0; i < 2; ++i) {
            double s = 0;
            for (int j = 0; j < 2; ++j)
                for (double v : cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) s += v;
            ma[i] = s / static_cast<double>(2 * reps);
        }
        for (int j = 0; j < 2; ++j) {
            double s = 0;
            for (int i = 0; i < 2; ++i)
                for (double v : cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) s += v;
            mb[j] = s / static_cast<double>(2 * reps);
        }
        double ss_a = 0, ss_b = 0, ss_ab = 0, ss_e = 0, ss_t = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double s = 0;
                for (double v : cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) s += v;
                cm[i][j] = s / static_cast<double>(reps);
                for (double v : cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    ss_a += (ma[i] - grand) * (ma[i] - grand);
                    ss_b += (mb[j] - grand) * (mb[j] - grand);
                    const double inter = cm[i][j] - ma[i] - mb[j] + grand;
                    ss_ab += inter * inter;
                    ss_e += (v - cm[i][j]) * (v - cm[i][j]);
                    ss_t += (v - grand) * (v - grand);
                }
            }
        if (std::abs(t.ss_a - ss_a) > 1e-9 || std::abs(t.ss_b - ss_b) > 1e-9 ||
            std::abs(t.ss_ab - ss_ab) > 1e-9 || std::abs(t.ss_error - ss_e) > 1e-9)
            oracle_ok = false;
        if (std::abs(t.ss_total - (t.ss_a + t.ss_b + t.ss_ab + t.ss_error)) > 1e-9)
            additivity_ok = false;
    }

    c.ms = ms_since(t0);
    c.pass = zeros_ok && oracle_ok && additivity_ok;
    char buf[120];
    std::snprintf(buf, sizeof(buf), "zeros %s, oracle %s, additivity %s", zeros_ok ? "ok" : "BAD",
                  oracle_ok ? "ok" : "BAD", additivity_ok ? "ok" : "BAD");
    c.detail = buf;
    return c;
}

Criterion c12_circular_stats() {
    Criterion c{12, "circular statistics"};
    const auto t0 = Clock::now();
    const CircularStats pair = circular_stats(std::vector<double>{M_PI / 4, -M_PI / 4}, 0.0);
    const CircularStats flat = circular_stats(std::vector<double>(25, 0.0), 0.0);
    c.ms = ms_since(t0);
    const double r_expect = std::sqrt(0.5);
    const double sd_expect = std::sqrt(-2.0 * std::log(r_expect));
    c.pass = std::abs(pair.resultant_r - 0.7071) < 1e-4 &&
             std::abs(pair.resultant_r - r_expect) < 1e-6 &&
             std::abs(pair.sd_phi - 0.8325) < 1e-4 && std::abs(pair.sd_phi - sd_expect) < 1e-6 &&
             flat.mean_shift == 0.0 && flat.sd_phi == 0.0;
    char buf[100];
    std::snprintf(buf, sizeof(buf), "R=%.6f SDphi=%.6f constant=(%.1f, %.1f)", pair.resultant_r,
                  pair.sd_phi, flat.mean_shift, flat.sd_phi);
    c.detail = buf;
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(c1_entropy_examples());
    results.push_back(c2_vector_arithmetic());
    results.push_back(c3_index_of_difficulty());
    results.push_back(c4_hkb_structure());
    results.push_back(c5_spring_closed_form());
    results.push_back(c6_lyapunov());
    results.push_back(c7_fermi());
    results.push_back(c8_flock_determinism_and_oracle());
    results.push_back(c9_social_ties_sweep());
    results.push_back(c10_circadian_direction());
    results.push_back(c11_anova());
    results.push_back(c12_circular_stats());

    int failures = 0;
    for (const auto& c : results) {
        if (!c.pass) ++failures;
        std::printf("[%s] C%-2d %s (%s; %.1f ms)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), c.detail.c_str(), c.ms);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
