#pragma once

#include "tma/estimators.hpp"
#include "tma/kinematics.hpp"

#include <filesystem>
#include <string>

namespace tma {

/// Estimation defaults from a scenario file's [estimation] section.
struct EstimationDefaults {
    BasisKind basis = BasisKind::Chebyshev1;
    int degree = 2;
    bool refine = false;
};

struct ScenarioFile {
    Scenario scenario;
    EstimationDefaults estimation;
};

/// Parse the flat key-value scenario format:
///
///   [scenario]  label, range_class, t_start_s, t_end_s, dt_s, seed
///   [target]    model = uniform | accelerated | parabola | circulation, ...
///   [observer]  model = legs | <any target model>, ...
///   [sensing]   sigma_deg
///   [estimation] basis, degree, refine            (optional section)
///
/// Angles are degrees in the file, radians internally. Unknown keys are
/// config errors. Throws ConfigError / IoError.
ScenarioFile parse_scenario_text(const std::string& text);

ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// FNV-1a 64-bit digest of a byte string, as 16 hex characters.
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file_bytes(const std::filesystem::path& path);

}  // namespace tma
