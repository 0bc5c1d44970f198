#include "tma/manifest.hpp"

#include "tma/csv.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>

namespace tma {

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    nlohmann::json j;
    j["tool_version"] = kToolVersion;
    j["scenario_file"] = manifest.scenario_file;
    j["scenario_digest_fnv1a64"] = manifest.scenario_digest;
    j["master_seed"] = manifest.master_seed;
    j["n_runs"] = manifest.n_runs;
    j["threads"] = manifest.threads;
    j["timestamp_utc"] = utc_timestamp();
    j["outputs"] = manifest.outputs;
    j["degenerate_methods"] = manifest.degenerate_methods;
    j["methods"] = nlohmann::json::array();
    for (const auto& m : manifest.methods) {
        nlohmann::json jm;
        jm["label"] = m.label;
        jm["kind"] = m.nbearings ? "nbearings" : "npoly";
        if (!m.nbearings) {
            jm["basis"] = to_string(m.config.basis);
            jm["degree"] = m.config.degree;
            jm["refine"] = m.config.refine;
        }
        j["methods"].push_back(jm);
    }
    write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace tma
