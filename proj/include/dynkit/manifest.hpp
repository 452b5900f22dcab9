#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dynkit {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// FNV-1a 64-bit content hash; pinned, platform-stable, hex-rendered.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes);
std::string digest_hex(std::uint64_t digest);
std::string digest_file(const std::filesystem::path& path);

struct OutputRecord {
    std::string path;   // relative to the output directory
    std::string digest; // fnv1a64 hex
    std::uint64_t bytes{0};
};

/// Record of one run: enough to re-run bit-identically (timestamps are
/// informational and excluded from all digests).
struct RunManifest {
    std::string artifact_version{kArtifactVersion};
    std::string command;
    std::string config_json; // canonical config snapshot
    std::string started_utc;
    std::string finished_utc;
    std::vector<OutputRecord> outputs;
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);
RunManifest read_manifest(const std::filesystem::path& path);

std::string utc_timestamp();

} // namespace dynkit
