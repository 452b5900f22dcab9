#include "dynkit/manifest.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "dynkit/errors.hpp"

namespace dynkit {

std::uint64_t fnv1a64(std::span<const unsigned char> bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string digest_hex(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

std::string digest_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file for digest: " + path.string());
    std::uint64_t h = 0xCBF29CE484222325ULL;
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001B3ULL;
        }
    }
    return digest_hex(h);
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    nlohmann::json j;
    j["artifact_version"] = manifest.artifact_version;
    j["command"] = manifest.command;
    j["config"] = nlohmann::json::parse(manifest.config_json);
    j["started_utc"] = manifest.started_utc;
    j["finished_utc"] = manifest.finished_utc;
    auto outputs = nlohmann::json::array();
    for (const auto& rec : manifest.outputs) {
        nlohmann::json o;
        o["path"] = rec.path;
        o["fnv1a64"] = rec.digest;
        o["bytes"] = rec.bytes;
        outputs.push_back(o);
    }
    j["outputs"] = outputs;

    std::ofstream out(path);
    if (!out) throw IoError("cannot write manifest: " + path.string());
    out << j.dump(2) << "\n";
    if (!out) throw IoError("failed writing manifest: " + path.string());
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read manifest: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("manifest is not valid JSON: " + std::string(e.what()));
    }
    RunManifest m;
    m.artifact_version = j.value("artifact_version", "");
    m.command = j.value("command", "");
    m.config_json = j.contains("config") ? j.at("config").dump(2) + "\n" : "";
    m.started_utc = j.value("started_utc", "");
    m.finished_utc = j.value("finished_utc", "");
    if (j.contains("outputs"))
        for (const auto& o : j.at("outputs")) {
            OutputRecord rec;
            rec.path = o.value("path", "");
            rec.digest = o.value("fnv1a64", "");
            rec.bytes = o.value("bytes", 0ULL);
            m.outputs.push_back(rec);
        }
    return m;
}

} // namespace dynkit
