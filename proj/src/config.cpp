#include "dynkit/config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dynkit/csv.hpp"
#include "dynkit/errors.hpp"

namespace dynkit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

std::string join_ctx(const std::string& ctx, const std::string& key) {
    return ctx.empty() ? key : ctx + "." + key;
}

void check_keys(const json& obj, const std::string& ctx, const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            fail("unknown key '" + join_ctx(ctx, item.key()) + "'");
    }
}

double get_number(const json& obj, const std::string& ctx, const std::string& key, double def) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(join_ctx(ctx, key) + ": expected a number");
    return v.get<double>();
}

double get_number_in(const json& obj, const std::string& ctx, const std::string& key, double def,
                     double lo, double hi) {
    const double x = get_number(obj, ctx, key, def);
    if (!(x >= lo && x <= hi)) {
        std::ostringstream msg;
        msg << join_ctx(ctx, key) << ": expected within [" << lo << ", " << hi << "], got " << x;
        fail(msg.str());
    }
    return x;
}

double get_number_min(const json& obj, const std::string& ctx, const std::string& key, double def,
                      double lo, bool inclusive = true) {
    const double x = get_number(obj, ctx, key, def);
    if (inclusive ? !(x >= lo) : !(x > lo)) {
        std::ostringstream msg;
        msg << join_ctx(ctx, key) << ": expected " << (inclusive ? ">= " : "> ") << lo << ", got " << x;
        fail(msg.str());
    }
    return x;
}

std::int64_t get_int_min(const json& obj, const std::string& ctx, const std::string& key,
                         std::int64_t def, std::int64_t lo) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(join_ctx(ctx, key) + ": expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < lo) fail(join_ctx(ctx, key) + ": expected >= " + std::to_string(lo) + ", got " +
                     std::to_string(x));
    return x;
}

bool get_bool(const json& obj, const std::string& ctx, const std::string& key, bool def) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(join_ctx(ctx, key) + ": expected a boolean");
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& ctx, const std::string& key,
                       const std::string& def) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_string()) fail(join_ctx(ctx, key) + ": expected a string");
    return v.get<std::string>();
}

std::vector<double> get_number_list(const json& obj, const std::string& ctx, const std::string& key,
                                    std::vector<double> def) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_array()) fail(join_ctx(ctx, key) + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& item : v) {
        if (!item.is_number()) fail(join_ctx(ctx, key) + ": expected an array of numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

FlockBlock parse_flock(const json& obj) {
    const std::string ctx = "flock";
    check_keys(obj, ctx,
               {"m", "d", "e", "v", "k", "k_prime", "t_ties", "w", "omega_sel", "nodes", "mode",
                "bounds", "boundary", "steps"});
    FlockBlock block;
    FlockParams& p = block.params;
    p.m = static_cast<int>(get_int_min(obj, ctx, "m", p.m, 2));
    p.d = get_number_min(obj, ctx, "d", p.d, 0.0);
    p.e = get_number_min(obj, ctx, "e", p.e, 0.0, false);
    p.v = get_number_min(obj, ctx, "v", p.v, 0.0);
    p.k = get_number_in(obj, ctx, "k", p.k, 0.0, 1.0);
    p.k_prime = get_number_in(obj, ctx, "k_prime", p.k_prime, 0.0, 1.0);
    p.t_ties = get_number_in(obj, ctx, "t_ties", p.t_ties, 0.1, 0.9);
    p.w = get_number_min(obj, ctx, "w", p.w, 0.0, false);
    if (p.w > 1.0) fail("flock.w: expected within (0, 1], got " + format_double(p.w));
    p.omega_sel = get_number_min(obj, ctx, "omega_sel", p.omega_sel, 0.0);
    p.nodes = static_cast<int>(get_int_min(obj, ctx, "nodes", p.nodes, 0));
    if (p.nodes == 1) fail("flock.nodes: expected 0 (auto) or >= 2, got 1");

    const char* mode_default =
        p.mode == PayoffMode::PI1 ? "PI1" : p.mode == PayoffMode::PI2 ? "PI2" : "PI3";
    const std::string mode = get_string(obj, ctx, "mode", mode_default);
    if (mode == "PI1") p.mode = PayoffMode::PI1;
    else if (mode == "PI2") p.mode = PayoffMode::PI2;
    else if (mode == "PI3") p.mode = PayoffMode::PI3;
    else fail("flock.mode: expected one of PI1|PI2|PI3, got '" + mode + "'");
    if (p.mode == PayoffMode::PI3 && p.k > 0.5)
        fail("flock.k: expected within [0, 0.5] for mode PI3, got " + format_double(p.k));

    if (obj.contains("bounds")) {
        const json& b = obj.at("bounds");
        if (!b.is_array() || b.size() != 4 ||
            !std::all_of(b.begin(), b.end(), [](const json& x) { return x.is_number(); }))
            fail("flock.bounds: expected [x0, y0, x1, y1]");
        p.bounds = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
        if (!(p.bounds.width() > 0.0 && p.bounds.height() > 0.0))
            fail("flock.bounds: expected x1 > x0 and y1 > y0");
    }
    const std::string boundary = get_string(obj, ctx, "boundary", "wrap");
    if (boundary == "wrap") p.boundary = BoundaryRule::Wrap;
    else if (boundary == "clamp") p.boundary = BoundaryRule::Clamp;
    else fail("flock.boundary: expected wrap|clamp, got '" + boundary + "'");

    block.steps = static_cast<int>(get_int_min(obj, ctx, "steps", block.steps, 1));
    return block;
}

HkbParams parse_hkb_params(const json& obj, const std::string& ctx, HkbParams p) {
    p.a = get_number_min(obj, ctx, "a", p.a, 0.0);
    p.b = get_number_min(obj, ctx, "b", p.b, 0.0);
    p.c = get_number(obj, ctx, "c", p.c);
    p.d = get_number(obj, ctx, "d", p.d);
    p.delta_omega = get_number(obj, ctx, "delta_omega", p.delta_omega);
    p.q = get_number_min(obj, ctx, "q", p.q, 0.0);
    return p;
}

HkbBlock parse_hkb(const json& obj) {
    const std::string ctx = "hkb";
    check_keys(obj, ctx, {"a", "b", "c", "d", "delta_omega", "q", "phi0", "dt", "steps"});
    HkbBlock block;
    block.params = parse_hkb_params(obj, ctx, block.params);
    block.phi0 = get_number(obj, ctx, "phi0", block.phi0);
    block.dt = get_number_min(obj, ctx, "dt", block.dt, 0.0, false);
    block.steps = static_cast<int>(get_int_min(obj, ctx, "steps", block.steps, 1));
    return block;
}

TemperatureProtocol parse_protocol(const json& obj) {
    const std::string ctx = "experiment.protocol";
    check_keys(obj, ctx,
               {"t_mean", "amplitude", "vest_offset", "gain_c", "gain_d", "noise_gain_circadian",
                "noise_gain_perturb"});
    TemperatureProtocol proto;
    proto.t_mean = get_number(obj, ctx, "t_mean", proto.t_mean);
    proto.amplitude = get_number_min(obj, ctx, "amplitude", proto.amplitude, 0.0);
    proto.vest_offset = get_number_min(obj, ctx, "vest_offset", proto.vest_offset, 0.0);
    proto.gain_c = get_number(obj, ctx, "gain_c", proto.gain_c);
    proto.gain_d = get_number(obj, ctx, "gain_d", proto.gain_d);
    proto.noise_gain_circadian =
        get_number(obj, ctx, "noise_gain_circadian", proto.noise_gain_circadian);
    proto.noise_gain_perturb = get_number(obj, ctx, "noise_gain_perturb", proto.noise_gain_perturb);
    return proto;
}

ExperimentBlock parse_experiment(const json& obj) {
    const std::string ctx = "experiment";
    check_keys(obj, ctx,
               {"points", "participants", "trials", "condition", "duration_s", "dt", "emit_series",
                "hkb", "protocol"});
    ExperimentBlock block;
    block.design.circadian_points =
        get_number_list(obj, ctx, "points", block.design.circadian_points);
    for (double h : block.design.circadian_points)
        if (!std::isfinite(h)) fail("experiment.points: hours must be finite");
    block.design.participants =
        static_cast<int>(get_int_min(obj, ctx, "participants", block.design.participants, 1));
    block.design.trials_per_point =
        static_cast<int>(get_int_min(obj, ctx, "trials", block.design.trials_per_point, 1));

    const std::string cond = get_string(obj, ctx, "condition", "NORMAL");
    if (cond == "NORMAL") block.design.condition = Condition::Normal;
    else if (cond == "HEAT") block.design.condition = Condition::Heat;
    else if (cond == "ICE") block.design.condition = Condition::Ice;
    else fail("experiment.condition: expected NORMAL|HEAT|ICE, got '" + cond + "'");

    block.design.duration_s = get_number_min(obj, ctx, "duration_s", block.design.duration_s, 0.0, false);
    block.design.dt = get_number_min(obj, ctx, "dt", block.design.dt, 0.0, false);
    block.emit_series = get_bool(obj, ctx, "emit_series", block.emit_series);
    if (obj.contains("hkb")) block.base = parse_hkb_params(obj.at("hkb"), ctx + ".hkb", block.base);
    if (obj.contains("hkb"))
        check_keys(obj.at("hkb"), ctx + ".hkb", {"a", "b", "c", "d", "delta_omega", "q"});
    if (obj.contains("protocol")) block.protocol = parse_protocol(obj.at("protocol"));
    return block;
}

EntropyBlock parse_entropy(const json& obj) {
    const std::string ctx = "entropy";
    check_keys(obj, ctx, {"probs", "renormalize", "input_csv", "bins"});
    EntropyBlock block;
    block.probs = get_number_list(obj, ctx, "probs", block.probs);
    for (double p : block.probs)
        if (!(p >= 0.0)) fail("entropy.probs: probabilities must be >= 0");
    block.renormalize = get_bool(obj, ctx, "renormalize", block.renormalize);
    block.input_csv = get_string(obj, ctx, "input_csv", block.input_csv);
    block.bins = static_cast<int>(get_int_min(obj, ctx, "bins", block.bins, 2));
    if (!block.probs.empty() && !block.input_csv.empty())
        fail("entropy: provide either probs or input_csv, not both");
    return block;
}

ChaosBlock parse_chaos(const json& obj) {
    const std::string ctx = "chaos";
    check_keys(obj, ctx, {"r_grid", "x0", "iterates", "burn_in", "epsilon0", "divergence_steps"});
    ChaosBlock block;
    block.r_grid = get_number_list(obj, ctx, "r_grid", block.r_grid);
    for (double r : block.r_grid)
        if (!(r >= 0.0 && r <= 4.0)) fail("chaos.r_grid: expected within [0, 4], got " + format_double(r));
    if (block.r_grid.empty()) fail("chaos.r_grid: must not be empty");
    block.x0 = get_number_in(obj, ctx, "x0", block.x0, 0.0, 1.0);
    block.iterates = get_int_min(obj, ctx, "iterates", block.iterates, 1000);
    block.burn_in = get_int_min(obj, ctx, "burn_in", block.burn_in, 0);
    block.epsilon0 = get_number_min(obj, ctx, "epsilon0", block.epsilon0, 0.0, false);
    block.divergence_steps = get_int_min(obj, ctx, "divergence_steps", block.divergence_steps, 0);
    return block;
}

SweepBlock parse_sweep(const json& obj) {
    const std::string ctx = "sweep";
    check_keys(obj, ctx, {"axis", "grid", "replicates"});
    SweepBlock block;
    block.axis = get_string(obj, ctx, "axis", block.axis);
    block.grid = get_number_list(obj, ctx, "grid", block.grid);
    if (block.grid.empty()) fail("sweep.grid: must not be empty");
    for (std::size_t i = 1; i < block.grid.size(); ++i)
        if (!(block.grid[i] > block.grid[i - 1])) fail("sweep.grid: must be strictly ascending");
    block.replicates = static_cast<int>(get_int_min(obj, ctx, "replicates", block.replicates, 1));
    return block;
}

json bounds_to_json(const Bounds& b) { return json::array({b.x0, b.y0, b.x1, b.y1}); }

json flock_to_json(const FlockBlock& block) {
    const FlockParams& p = block.params;
    json j;
    j["m"] = p.m;
    j["d"] = p.d;
    j["e"] = p.e;
    j["v"] = p.v;
    j["k"] = p.k;
    j["k_prime"] = p.k_prime;
    j["t_ties"] = p.t_ties;
    j["w"] = p.w;
    j["omega_sel"] = p.omega_sel;
    j["nodes"] = p.nodes;
    j["mode"] = p.mode == PayoffMode::PI1 ? "PI1" : p.mode == PayoffMode::PI2 ? "PI2" : "PI3";
    j["bounds"] = bounds_to_json(p.bounds);
    j["boundary"] = p.boundary == BoundaryRule::Wrap ? "wrap" : "clamp";
    j["steps"] = block.steps;
    return j;
}

json hkb_params_to_json(const HkbParams& p) {
    json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["c"] = p.c;
    j["d"] = p.d;
    j["delta_omega"] = p.delta_omega;
    j["q"] = p.q;
    return j;
}

} // namespace

const char* command_name(Command c) {
    switch (c) {
        case Command::Flock: return "flock";
        case Command::Hkb: return "hkb";
        case Command::Experiment: return "experiment";
        case Command::Entropy: return "entropy";
        case Command::Chaos: return "chaos";
        case Command::Sweep: return "sweep";
    }
    return "?";
}

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("config root must be a JSON object");

    RunConfig cfg;
    const std::string cmd = get_string(doc, "", "command", "flock");
    if (cmd == "flock") cfg.command = Command::Flock;
    else if (cmd == "hkb") cfg.command = Command::Hkb;
    else if (cmd == "experiment") cfg.command = Command::Experiment;
    else if (cmd == "entropy") cfg.command = Command::Entropy;
    else if (cmd == "chaos") cfg.command = Command::Chaos;
    else if (cmd == "sweep") cfg.command = Command::Sweep;
    else fail("command: expected flock|hkb|experiment|entropy|chaos|sweep, got '" + cmd + "'");

    std::set<std::string> allowed{"command", "seed", "output_dir", "format", "jobs"};
    allowed.insert(cmd == "sweep" ? "flock" : cmd);
    if (cmd == "sweep") allowed.insert("sweep");
    check_keys(doc, "", allowed);

    if (doc.contains("seed")) {
        const json& s = doc.at("seed");
        if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0))
            fail("seed: expected a non-negative integer");
        cfg.seed = s.get<std::uint64_t>();
    }
    cfg.output_dir = get_string(doc, "", "output_dir", cfg.output_dir);
    const std::string fmt = get_string(doc, "", "format", "csv");
    if (fmt == "csv") cfg.format = OutputFormat::Csv;
    else if (fmt == "json") cfg.format = OutputFormat::Json;
    else fail("format: expected csv|json, got '" + fmt + "'");
    cfg.jobs = static_cast<int>(get_int_min(doc, "", "jobs", cfg.jobs, 1));

    if (doc.contains("flock")) cfg.flock = parse_flock(doc.at("flock"));
    if (doc.contains("hkb")) cfg.hkb = parse_hkb(doc.at("hkb"));
    if (doc.contains("experiment")) cfg.experiment = parse_experiment(doc.at("experiment"));
    if (doc.contains("entropy")) cfg.entropy = parse_entropy(doc.at("entropy"));
    if (doc.contains("chaos")) cfg.chaos = parse_chaos(doc.at("chaos"));
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc.at("sweep"));

    if (cfg.command == Command::Sweep && cfg.sweep.axis == "t_ties") {
        for (double g : cfg.sweep.grid)
            if (!(g >= 0.1 && g <= 0.9))
                fail("sweep.grid: t_ties values must lie in [0.1, 0.9], got " + format_double(g));
    }
    return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
    json j;
    j["command"] = command_name(cfg.command);
    j["seed"] = cfg.seed;
    j["output_dir"] = cfg.output_dir;
    j["format"] = cfg.format == OutputFormat::Csv ? "csv" : "json";
    j["jobs"] = cfg.jobs;

    switch (cfg.command) {
        case Command::Flock:
            j["flock"] = flock_to_json(cfg.flock);
            break;
        case Command::Hkb: {
            json h = hkb_params_to_json(cfg.hkb.params);
            h["phi0"] = cfg.hkb.phi0;
            h["dt"] = cfg.hkb.dt;
            h["steps"] = cfg.hkb.steps;
            j["hkb"] = h;
            break;
        }
        case Command::Experiment: {
            json e;
            e["points"] = cfg.experiment.design.circadian_points;
            e["participants"] = cfg.experiment.design.participants;
            e["trials"] = cfg.experiment.design.trials_per_point;
            e["condition"] = condition_name(cfg.experiment.design.condition);
            e["duration_s"] = cfg.experiment.design.duration_s;
            e["dt"] = cfg.experiment.design.dt;
            e["emit_series"] = cfg.experiment.emit_series;
            e["hkb"] = hkb_params_to_json(cfg.experiment.base);
            json pr;
            pr["t_mean"] = cfg.experiment.protocol.t_mean;
            pr["amplitude"] = cfg.experiment.protocol.amplitude;
            pr["vest_offset"] = cfg.experiment.protocol.vest_offset;
            pr["gain_c"] = cfg.experiment.protocol.gain_c;
            pr["gain_d"] = cfg.experiment.protocol.gain_d;
            pr["noise_gain_circadian"] = cfg.experiment.protocol.noise_gain_circadian;
            pr["noise_gain_perturb"] = cfg.experiment.protocol.noise_gain_perturb;
            e["protocol"] = pr;
            j["experiment"] = e;
            break;
        }
        case Command::Entropy: {
            json e;
            if (!cfg.entropy.probs.empty()) e["probs"] = cfg.entropy.probs;
            e["renormalize"] = cfg.entropy.renormalize;
            if (!cfg.entropy.input_csv.empty()) e["input_csv"] = cfg.entropy.input_csv;
            e["bins"] = cfg.entropy.bins;
            j["entropy"] = e;
            break;
        }
        case Command::Chaos: {
            json c;
            c["r_grid"] = cfg.chaos.r_grid;
            c["x0"] = cfg.chaos.x0;
            c["iterates"] = cfg.chaos.iterates;
            c["burn_in"] = cfg.chaos.burn_in;
            c["epsilon0"] = cfg.chaos.epsilon0;
            c["divergence_steps"] = cfg.chaos.divergence_steps;
            j["chaos"] = c;
            break;
        }
        case Command::Sweep: {
            j["flock"] = flock_to_json(cfg.flock);
            json s;
            s["axis"] = cfg.sweep.axis;
            s["grid"] = cfg.sweep.grid;
            s["replicates"] = cfg.sweep.replicates;
            j["sweep"] = s;
            break;
        }
    }
    return j.dump(2) + "\n";
}

} // namespace dynkit
