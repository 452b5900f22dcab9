// Command-line front end: reads a JSON run config, applies flag overrides,
// executes the requested command and reports the manifest path.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynkit/config.hpp"
#include "dynkit/errors.hpp"
#include "dynkit/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dynkit::IoError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynkit: deterministic flocking, phase-dynamics, entropy and chaos toolkit"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string config_path;
    std::string out_dir;
    std::string format;
    std::uint64_t seed = 0;
    int jobs = 0;
    app.add_option("--config", config_path, "JSON config file");
    auto* seed_opt = app.add_option("--seed", seed, "seed override (u64)");
    auto* out_opt = app.add_option("--out", out_dir, "output directory override");
    auto* fmt_opt = app.add_option("--format", format, "output format: csv|json")
                        ->check(CLI::IsMember({"csv", "json"}));
    auto* jobs_opt = app.add_option("--jobs", jobs, "worker threads for sweeps")
                         ->check(CLI::PositiveNumber);

    app.add_subcommand("flock", "run the flocking model and emit per-step metrics");
    app.add_subcommand("hkb", "integrate the relative-phase dynamics");
    app.add_subcommand("experiment", "generate the synthetic circadian experiment");
    app.add_subcommand("entropy", "Shannon entropy of a probability set or phase series");
    app.add_subcommand("chaos", "logistic-map Lyapunov exponents and orbit divergence");
    app.add_subcommand("sweep", "sweep a flock parameter over a grid with replicates");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string text = "{}";
        if (!config_path.empty()) text = read_file(config_path);

        const auto chosen = app.get_subcommands();
        if (chosen.empty() && config_path.empty()) {
            std::cerr << "error: provide a subcommand or a --config file\n";
            return kExitConfig;
        }
        if (!chosen.empty()) {
            const std::string name = chosen.front()->get_name();
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                throw dynkit::ConfigError(std::string("config is not valid JSON: ") + e.what());
            }
            if (doc.contains("command") && doc.at("command") != name) {
                std::cerr << "error: config declares command '"
                          << doc.at("command").get<std::string>() << "' but subcommand '" << name
                          << "' was requested\n";
                return kExitConfig;
            }
            doc["command"] = name;
            text = doc.dump();
        }

        dynkit::RunConfig cfg = dynkit::parse_config(text);
        if (*seed_opt) cfg.seed = seed;
        if (*out_opt) cfg.output_dir = out_dir;
        if (*fmt_opt)
            cfg.format = format == "json" ? dynkit::OutputFormat::Json : dynkit::OutputFormat::Csv;
        if (*jobs_opt) cfg.jobs = jobs;

        const dynkit::RunManifest manifest = dynkit::run_command(cfg);
        std::cout << "wrote " << manifest.outputs.size() << " file(s) + manifest to "
                  << cfg.output_dir << "\n";
        return kExitOk;
    } catch (const dynkit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dynkit::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const dynkit::IntegrationError& e) {
        std::cerr << "integration error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const dynkit::DegenerateError& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return kExitNumeric;
    }
}
