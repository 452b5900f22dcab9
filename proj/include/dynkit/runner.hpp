#pragma once

#include "dynkit/config.hpp"
#include "dynkit/manifest.hpp"

namespace dynkit {

/// Execute a validated config: dispatch on the command, write the data
/// tables and manifest.json under cfg.output_dir, and return the manifest.
/// Identical configs produce identical output digests; sweep execution may
/// be parallel (cfg.jobs) without changing a byte.
RunManifest run_command(const RunConfig& cfg);

/// Sweep a named numeric flock parameter over a grid with seeded replicate
/// substreams. Called by run_command for sweep configs; exposed for direct use.
RunManifest orchestrate_sweep(const RunConfig& cfg);

} // namespace dynkit
