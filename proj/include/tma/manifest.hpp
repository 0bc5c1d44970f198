#pragma once

#include "tma/evaluation.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace tma {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reproducibility record written alongside compare/sweep outputs.
struct RunManifest {
    std::string scenario_file;
    std::string scenario_digest;  // FNV-1a 64 of the scenario file bytes
    std::uint64_t master_seed = 0;
    std::vector<MethodSpec> methods;
    int n_runs = 0;
    int threads = 1;
    std::vector<std::string> outputs;
    std::vector<std::string> degenerate_methods;  // >50% failed runs
};

/// Serialize and write atomically as JSON, with a wall-clock timestamp.
/// The timestamp is the only non-deterministic field; all numeric output
/// files remain a pure function of scenario + seed + methods.
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace tma
