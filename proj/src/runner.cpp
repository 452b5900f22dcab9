#include "dynkit/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dynkit/chaos.hpp"
#include "dynkit/circular.hpp"
#include "dynkit/csv.hpp"
#include "dynkit/entropy.hpp"
#include "dynkit/errors.hpp"
#include "dynkit/experiment.hpp"
#include "dynkit/flock.hpp"
#include "dynkit/hkb.hpp"

namespace dynkit {

namespace {

namespace fs = std::filesystem;

/// Rows hold pre-formatted strings so CSV and JSON emission share the exact
/// same number rendering (and therefore stable digests).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

void write_table(const Table& table, const fs::path& path, OutputFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + path.string());
    if (format == OutputFormat::Csv) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << "\n";
        }
    } else {
        out << "[\n";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            out << "  {";
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                const std::string& v = table.rows[r][c];
                const bool numeric = !v.empty() && v.find_first_not_of("0123456789+-.eE") == std::string::npos;
                out << (c ? ", " : "") << '"' << table.columns[c] << "\": ";
                if (numeric) out << v;
                else out << '"' << v << '"';
            }
            out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
        }
        out << "]\n";
    }
    if (!out) throw IoError("failed writing output file: " + path.string());
}

std::string table_extension(OutputFormat format) {
    return format == OutputFormat::Csv ? ".csv" : ".json";
}

struct Emitter {
    fs::path dir;
    OutputFormat format;
    std::vector<OutputRecord> written;

    void emit(const Table& table, const std::string& stem) {
        const fs::path path = dir / (stem + table_extension(format));
        write_table(table, path, format);
        record(path);
    }

    void emit_json(const nlohmann::json& j, const std::string& name) {
        const fs::path path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write output file: " + path.string());
        out << j.dump(2) << "\n";
        if (!out) throw IoError("failed writing output file: " + path.string());
        record(path);
    }

    void record(const fs::path& path) {
        OutputRecord rec;
        rec.path = path.filename().string();
        rec.digest = digest_file(path);
        rec.bytes = static_cast<std::uint64_t>(fs::file_size(path));
        written.push_back(std::move(rec));
    }
};

std::string fd(double v) { return format_double(v); }
std::string fi(std::int64_t v) { return format_int(v); }

// --- command bodies ------------------------------------------------------

void run_flock_command(const RunConfig& cfg, Emitter& em) {
    const FlockRun run = run_flock(cfg.flock.params, cfg.flock.steps, cfg.seed);
    Table t;
    t.columns = {"step", "avg_displacement", "cluster_var_min", "cluster_var_max",
                 "sd_displacement", "entropy_bits"};
    for (std::size_t i = 0; i < run.metrics.size(); ++i) {
        const FlockMetrics& m = run.metrics[i];
        t.add_row({fi(static_cast<std::int64_t>(i) + 1), fd(m.avg_displacement),
                   fd(m.cluster_var_min), fd(m.cluster_var_max), fd(m.sd_displacement),
                   fd(m.entropy_bits)});
    }
    em.emit(t, "flock_metrics");
}

void run_hkb_command(const RunConfig& cfg, Emitter& em) {
    const PhaseSeries series = integrate_phase(cfg.hkb.params, cfg.hkb.phi0, cfg.hkb.dt,
                                               cfg.hkb.steps, RandomStream(cfg.seed));
    Table t;
    t.columns = {"t_seconds", "phi_radians"};
    for (std::size_t i = 0; i < series.samples.size(); ++i)
        t.add_row({fd(static_cast<double>(i) * series.dt), fd(series.samples[i])});
    em.emit(t, "phase_series");

    Table fp;
    fp.columns = {"phi_star", "stable"};
    for (const auto& point : fixed_points(cfg.hkb.params))
        fp.add_row({fd(point.phi), fi(point.stable ? 1 : 0)});
    em.emit(fp, "fixed_points");
}

void run_experiment_command(const RunConfig& cfg, Emitter& em) {
    const auto records = synthetic_experiment(cfg.experiment.design, cfg.experiment.base,
                                              cfg.experiment.protocol, cfg.seed);
    Table index;
    index.columns = {"participant", "hour", "trial", "n_samples", "dt", "q_effective",
                     "detuning", "entropy_bits", "mean_shift", "sd_phi"};
    for (const auto& rec : records) {
        std::vector<double> wrapped(rec.series.samples.size());
        std::transform(rec.series.samples.begin(), rec.series.samples.end(), wrapped.begin(),
                       wrap_phase);
        const double h = shannon_entropy(phase_histogram(wrapped).probs).h_bits;
        const CircularStats stats = circular_stats(rec.series.samples, 0.0);
        index.add_row({fi(rec.participant), fd(rec.hour), fi(rec.trial),
                       fi(static_cast<std::int64_t>(rec.series.samples.size())), fd(rec.series.dt),
                       fd(rec.q_effective), fd(rec.detuning), fd(h), fd(stats.mean_shift),
                       fd(stats.sd_phi)});
    }
    em.emit(index, "trials");

    if (cfg.experiment.emit_series) {
        Table series;
        series.columns = {"participant", "hour", "trial", "t_seconds", "phi_radians"};
        for (const auto& rec : records)
            for (std::size_t i = 0; i < rec.series.samples.size(); ++i)
                series.add_row({fi(rec.participant), fd(rec.hour), fi(rec.trial),
                                fd(static_cast<double>(i) * rec.series.dt),
                                fd(rec.series.samples[i])});
        em.emit(series, "phase_series");
    }
}

std::vector<double> read_phi_column(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read input csv: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("input csv is empty: " + path.string());

    std::vector<std::string> header;
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
    const auto it = std::find(header.begin(), header.end(), "phi_radians");
    if (it == header.end())
        throw ConfigError("entropy.input_csv: no 'phi_radians' column in " + path.string());
    const std::size_t col = static_cast<std::size_t>(it - header.begin());

    std::vector<double> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::size_t c = 0;
        std::string value;
        while (std::getline(ls, value, ',')) {
            if (c == col) {
                out.push_back(std::stod(value));
                break;
            }
            ++c;
        }
    }
    if (out.empty()) throw ConfigError("entropy.input_csv: no data rows in " + path.string());
    return out;
}

void run_entropy_command(const RunConfig& cfg, Emitter& em) {
    EntropyReport report;
    if (!cfg.entropy.probs.empty()) {
        report = shannon_entropy(cfg.entropy.probs, cfg.entropy.renormalize);
    } else if (!cfg.entropy.input_csv.empty()) {
        const auto samples = read_phi_column(cfg.entropy.input_csv);
        std::vector<double> wrapped(samples.size());
        std::transform(samples.begin(), samples.end(), wrapped.begin(), wrap_phase);
        report = shannon_entropy(phase_histogram(wrapped, cfg.entropy.bins).probs,
                                 cfg.entropy.renormalize);
    } else {
        throw ConfigError("entropy: provide probs or input_csv");
    }
    nlohmann::json j;
    j["h_bits"] = report.h_bits;
    j["prob_sum"] = report.prob_sum;
    j["renormalized"] = report.renormalized;
    em.emit_json(j, "entropy.json");
}

void run_chaos_command(const RunConfig& cfg, Emitter& em) {
    Table t;
    t.columns = {"r", "lambda", "used", "skipped"};
    for (double r : cfg.chaos.r_grid) {
        const LyapunovEstimate est = lyapunov({r}, cfg.chaos.x0, cfg.chaos.iterates, cfg.chaos.burn_in);
        t.add_row({fd(r), fd(est.lambda), fi(est.used), fi(est.skipped)});
    }
    em.emit(t, "lyapunov");

    if (cfg.chaos.divergence_steps > 0) {
        Table d;
        d.columns = {"r", "iterate", "distance"};
        for (double r : cfg.chaos.r_grid) {
            const DivergenceTrace trace =
                orbit_divergence({r}, cfg.chaos.x0, cfg.chaos.epsilon0, cfg.chaos.divergence_steps);
            for (std::size_t i = 0; i < trace.distances.size(); ++i)
                d.add_row({fd(r), fi(static_cast<std::int64_t>(i)), fd(trace.distances[i])});
        }
        em.emit(d, "divergence");
    }
}

void apply_axis(FlockParams& params, const std::string& axis, double value) {
    if (axis == "t_ties") params.t_ties = value;
    else if (axis == "k") params.k = value;
    else if (axis == "k_prime") params.k_prime = value;
    else if (axis == "w") params.w = value;
    else if (axis == "omega_sel") params.omega_sel = value;
    else if (axis == "e") params.e = value;
    else if (axis == "v") params.v = value;
    else if (axis == "d") params.d = value;
    else throw std::invalid_argument("sweep.axis: unknown flock parameter '" + axis + "'");
}

void run_sweep_command(const RunConfig& cfg, Emitter& em) {
    const auto& grid = cfg.sweep.grid;
    const auto replicates = static_cast<std::size_t>(cfg.sweep.replicates);
    const std::size_t n_tasks = grid.size() * replicates;

    // Validate every grid point up front so failures carry the axis name.
    for (double g : grid) {
        FlockParams probe = cfg.flock.params;
        apply_axis(probe, cfg.sweep.axis, g);
        validate(probe);
    }

    std::vector<FlockMetrics> final_metrics(n_tasks);
    std::vector<double> run_mean_disp(n_tasks, 0.0);
    auto run_task = [&](std::size_t task) {
        const std::size_t gi = task / replicates;
        const std::size_t rep = task % replicates;
        FlockParams local = cfg.flock.params;
        apply_axis(local, cfg.sweep.axis, grid[gi]);
        const FlockRun run = run_flock(local, cfg.flock.steps, sweep_child_seed(cfg.seed, gi, rep));
        final_metrics[task] = run.metrics.back();
        double mean = 0.0;
        for (const FlockMetrics& m : run.metrics) mean += m.avg_displacement;
        run_mean_disp[task] = mean / static_cast<double>(run.metrics.size());
    };

    if (cfg.jobs <= 1 || n_tasks <= 1) {
        for (std::size_t t = 0; t < n_tasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (std::size_t t = cursor.fetch_add(1); t < n_tasks; t = cursor.fetch_add(1))
                run_task(t);
        };
        std::vector<std::thread> pool;
        const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), n_tasks);
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Table runs;
    runs.columns = {"grid_index", cfg.sweep.axis, "replicate", "child_seed",
                    "run_mean_avg_displacement", "avg_displacement", "cluster_var_min",
                    "cluster_var_max", "sd_displacement", "entropy_bits"};
    for (std::size_t task = 0; task < n_tasks; ++task) {
        const std::size_t gi = task / replicates;
        const std::size_t rep = task % replicates;
        const FlockMetrics& m = final_metrics[task];
        runs.add_row({fi(static_cast<std::int64_t>(gi)), fd(grid[gi]),
                      fi(static_cast<std::int64_t>(rep)),
                      fi(static_cast<std::int64_t>(sweep_child_seed(cfg.seed, gi, rep))),
                      fd(run_mean_disp[task]), fd(m.avg_displacement), fd(m.cluster_var_min),
                      fd(m.cluster_var_max), fd(m.sd_displacement), fd(m.entropy_bits)});
    }
    em.emit(runs, "sweep_runs");

    // Per-point metric: run mean of avg_displacement, then replicate mean
    // (identical to sweep_social_ties).
    std::vector<double> means(grid.size(), 0.0);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        for (std::size_t rep = 0; rep < replicates; ++rep)
            means[gi] += run_mean_disp[gi * replicates + rep];
        means[gi] /= static_cast<double>(replicates);
    }

    Table points;
    points.columns = {cfg.sweep.axis, "mean_avg_displacement"};
    for (std::size_t gi = 0; gi < grid.size(); ++gi)
        points.add_row({fd(grid[gi]), fd(means[gi])});
    em.emit(points, "sweep_points");

    const auto [mn, mx] = std::minmax_element(means.begin(), means.end());
    bool degenerate = *mx - *mn <= 1e-12 * std::max(1.0, std::abs(*mx));
    double decay_rate = 0.0;
    if (!degenerate) {
        const std::size_t peak =
            static_cast<std::size_t>(std::max_element(means.begin(), means.end()) - means.begin());
        const DecayFit fit =
            fit_exponential_decay(std::span<const double>{grid.data() + peak, grid.size() - peak},
                                  std::span<const double>{means.data() + peak, grid.size() - peak});
        if (fit.ok) decay_rate = fit.rate;
        else degenerate = true; // post-peak region too short or non-positive
    }
    nlohmann::json summary;
    summary["axis"] = cfg.sweep.axis;
    summary["decay_rate"] = decay_rate;
    summary["threshold_estimate"] = degenerate ? grid.front() : steepest_grid_point(grid, means);
    summary["degenerate"] = degenerate;
    summary["replicates"] = cfg.sweep.replicates;
    em.emit_json(summary, "sweep_summary.json");
}

} // namespace

RunManifest orchestrate_sweep(const RunConfig& cfg) { return run_command(cfg); }

RunManifest run_command(const RunConfig& cfg) {
    RunManifest manifest;
    manifest.command = command_name(cfg.command);
    manifest.config_json = serialize_config(cfg);
    manifest.started_utc = utc_timestamp();

    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + cfg.output_dir);

    Emitter em{fs::path(cfg.output_dir), cfg.format, {}};
    switch (cfg.command) {
        case Command::Flock: run_flock_command(cfg, em); break;
        case Command::Hkb: run_hkb_command(cfg, em); break;
        case Command::Experiment: run_experiment_command(cfg, em); break;
        case Command::Entropy: run_entropy_command(cfg, em); break;
        case Command::Chaos: run_chaos_command(cfg, em); break;
        case Command::Sweep: run_sweep_command(cfg, em); break;
    }

    manifest.finished_utc = utc_timestamp();
    manifest.outputs = em.written;
    write_manifest(manifest, fs::path(cfg.output_dir) / "manifest.json");
    return manifest;
}

} // namespace dynkit
