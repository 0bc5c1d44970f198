#include "tma/scenario_io.hpp"

#include "tma/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tma {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

/// Sectioned key-value store that tracks which keys were consumed, so
/// typos surface as errors instead of silently ignored settings.
class ConfigMap {
public:
    void insert(const std::string& section, const std::string& key, const std::string& value,
                int line_no) {
        auto [it, fresh] = values_[section].emplace(key, value);
        if (!fresh) {
            std::ostringstream os;
            os << "duplicate key \"" << key << "\" in [" << section << "] (line " << line_no << ")";
            throw ConfigError(os.str());
        }
    }

    bool has(const std::string& section, const std::string& key) const {
        auto sec = values_.find(section);
        return sec != values_.end() && sec->second.count(key) > 0;
    }

    std::string get_string(const std::string& section, const std::string& key) {
        auto sec = values_.find(section);
        if (sec == values_.end() || sec->second.find(key) == sec->second.end()) {
            throw ConfigError("missing required key \"" + key + "\" in [" + section + "]");
        }
        consumed_.insert(section + "." + key);
        return sec->second.at(key);
    }

    std::string get_string_or(const std::string& section, const std::string& key,
                              const std::string& fallback) {
        if (!has(section, key)) return fallback;
        return get_string(section, key);
    }

    double get_double(const std::string& section, const std::string& key) {
        std::string raw = get_string(section, key);
        double out;
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), out);
        if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
            throw ConfigError(key + ": not a number (got \"" + raw + "\")");
        }
        return out;
    }

    double get_double_or(const std::string& section, const std::string& key, double fallback) {
        if (!has(section, key)) return fallback;
        return get_double(section, key);
    }

    std::uint64_t get_u64(const std::string& section, const std::string& key) {
        std::string raw = get_string(section, key);
        std::uint64_t out;
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), out);
        if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
            throw ConfigError(key + ": not an unsigned integer (got \"" + raw + "\")");
        }
        return out;
    }

    bool get_bool_or(const std::string& section, const std::string& key, bool fallback) {
        if (!has(section, key)) return fallback;
        std::string raw = get_string(section, key);
        if (raw == "on" || raw == "true" || raw == "1") return true;
        if (raw == "off" || raw == "false" || raw == "0") return false;
        throw ConfigError(key + ": expected on/off (got \"" + raw + "\")");
    }

    void ensure_all_consumed() const {
        for (const auto& [section, kv] : values_) {
            for (const auto& [key, value] : kv) {
                if (consumed_.find(section + "." + key) == consumed_.end()) {
                    throw ConfigError("unknown key \"" + key + "\" in [" + section + "]");
                }
            }
        }
    }

private:
    std::map<std::string, std::map<std::string, std::string>> values_;
    std::set<std::string> consumed_;
};

ConfigMap parse_key_values(const std::string& text) {
    ConfigMap cfg;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("malformed section header at line " + std::to_string(line_no));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value at line " + std::to_string(line_no));
        if (section.empty())
            throw ConfigError("key outside any [section] at line " + std::to_string(line_no));
        cfg.insert(section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no);
    }
    return cfg;
}

TrajectoryModel parse_model(ConfigMap& cfg, const std::string& section, const std::string& kind) {
    if (kind == "uniform") {
        return UniformLinear{{cfg.get_double(section, "x0_m"), cfg.get_double(section, "y0_m")},
                             {cfg.get_double(section, "vx_mps"), cfg.get_double(section, "vy_mps")}};
    }
    if (kind == "accelerated") {
        return UniformlyAccelerated{
            {cfg.get_double(section, "x0_m"), cfg.get_double(section, "y0_m")},
            {cfg.get_double(section, "vx_mps"), cfg.get_double(section, "vy_mps")},
            cfg.get_double(section, "ax_mps2"),
            cfg.get_double(section, "ay_mps2")};
    }
    if (kind == "parabola") {
        double ax = cfg.get_double(section, "along_x");
        double ay = cfg.get_double(section, "along_y");
        double n = std::hypot(ax, ay);
        if (!(n > 0.0)) throw ConfigError("along_x/along_y: must be a nonzero direction");
        return Parabola{{cfg.get_double(section, "x0_m"), cfg.get_double(section, "y0_m")},
                        {ax / n, ay / n},
                        cfg.get_double(section, "speed_mps"),
                        cfg.get_double(section, "curvature_inv_m")};
    }
    if (kind == "circulation") {
        return Circulation{{cfg.get_double(section, "cx_m"), cfg.get_double(section, "cy_m")},
                           cfg.get_double(section, "radius_m"),
                           deg_to_rad(cfg.get_double(section, "turn_rate_degps")),
                           deg_to_rad(cfg.get_double_or(section, "phase0_deg", 0.0))};
    }
    throw ConfigError(section + " model: unknown kind \"" + kind +
                      "\" (expected uniform, accelerated, parabola, circulation)");
}

ObserverPath parse_observer(ConfigMap& cfg, double t_start) {
    std::string kind = cfg.get_string("observer", "model");
    if (kind != "legs") return TrajectoryModel{parse_model(cfg, "observer", kind)};

    WorldPoint start{cfg.get_double("observer", "x0_m"), cfg.get_double("observer", "y0_m")};
    auto count = static_cast<int>(cfg.get_double("observer", "leg_count"));
    if (count < 1) throw ConfigError("leg_count: must be >= 1");
    std::vector<std::pair<double, WorldVector>> segments;
    for (int i = 1; i <= count; ++i) {
        std::string prefix = "leg" + std::to_string(i) + "_";
        segments.emplace_back(
            cfg.get_double("observer", prefix + "duration_s"),
            WorldVector{cfg.get_double("observer", prefix + "vx_mps"),
                        cfg.get_double("observer", prefix + "vy_mps")});
    }
    return make_leg_sequence(start, t_start, segments);
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
    ConfigMap cfg = parse_key_values(text);

    ScenarioFile out;
    Scenario& s = out.scenario;
    s.label = cfg.get_string("scenario", "label");
    s.initial_range_class = cfg.get_string_or("scenario", "range_class", "average");
    if (s.initial_range_class != "small" && s.initial_range_class != "average" &&
        s.initial_range_class != "big") {
        throw ConfigError("range_class: must be small, average, or big (got \"" +
                          s.initial_range_class + "\")");
    }
    s.t_start = cfg.get_double("scenario", "t_start_s");
    s.t_end = cfg.get_double("scenario", "t_end_s");
    s.dt = cfg.get_double("scenario", "dt_s");
    s.seed = cfg.get_u64("scenario", "seed");
    s.bearing_sigma = deg_to_rad(cfg.get_double("sensing", "sigma_deg"));

    s.target = parse_model(cfg, "target", cfg.get_string("target", "model"));
    s.observer = parse_observer(cfg, s.t_start);

    if (cfg.has("estimation", "basis"))
        out.estimation.basis = basis_kind_from_string(cfg.get_string("estimation", "basis"));
    if (cfg.has("estimation", "degree")) {
        out.estimation.degree = static_cast<int>(cfg.get_double("estimation", "degree"));
    }
    out.estimation.refine = cfg.get_bool_or("estimation", "refine", false);

    cfg.ensure_all_consumed();
    out.scenario.validate(out.estimation.degree);
    return out;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
    return parse_scenario_text(read_file_bytes(path));
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xF);
    return os.str();
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace tma
