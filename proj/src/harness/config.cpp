#include "cdcp/harness/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cdcp/core/types.hpp"

namespace cdcp::harness {

namespace {

std::string trim(const std::string& s) {
    const size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "1" || value == "true" || value == "yes") return true;
    if (value == "0" || value == "false" || value == "no") return false;
    throw Error("config: bad boolean for " + key + ": " + value);
}

void apply(PipelineConfig& config, const std::string& key, const std::string& value) {
    try {
        if (key == "region_count" || key == "K")
            config.region_count = std::stoi(value);
        else if (key == "sigma2")
            config.sigma2 = std::stod(value);
        else if (key == "patch_radius")
            config.patch_radius = std::stoi(value);
        else if (key == "light_fraction")
            config.light_fraction = std::stod(value);
        else if (key == "boundary_clusters" || key == "B")
            config.boundary_clusters = std::stoi(value);
        else if (key == "seed")
            config.seed = std::stoull(value);
        else if (key == "depth_inverted")
            config.depth_inverted = parse_bool(value, key);
        else
            throw Error("config: unknown key: " + key);
    } catch (const std::invalid_argument&) {
        throw Error("config: bad value for " + key + ": " + value);
    } catch (const std::out_of_range&) {
        throw Error("config: value out of range for " + key + ": " + value);
    }
}

}  // namespace

void PipelineConfig::validate() const {
    if (region_count < 2) throw Error("config: region_count must be >= 2");
    if (sigma2 <= 0.0) throw Error("config: sigma2 must be positive");
    if (patch_radius < 1) throw Error("config: patch_radius must be >= 1");
    if (!(light_fraction > 0.0) || light_fraction > 0.01)
        throw Error("config: light_fraction must be in (0, 0.01]");
    if (boundary_clusters < 1) throw Error("config: boundary_clusters must be >= 1");
}

PipelineConfig parse_config_text(const std::string& text, const PipelineConfig& base) {
    PipelineConfig config = base;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw Error("config: line " + std::to_string(line_no) + " is not key=value: " +
                        stripped);
        apply(config, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    config.validate();
    return config;
}

PipelineConfig load_config_file(const std::string& path, const PipelineConfig& base) {
    std::ifstream in(path);
    if (!in) throw Error("config: cannot open " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str(), base);
}

PipelineConfig resolve_config(const std::string& explicit_path) {
    PipelineConfig config;
    if (const char* env = std::getenv("CDCP_CONFIG"); env && *env)
        config = load_config_file(env, config);
    if (!explicit_path.empty()) config = load_config_file(explicit_path, config);
    config.validate();
    return config;
}

std::string config_summary(const PipelineConfig& c) {
    std::ostringstream out;
    out << "region_count=" << c.region_count << " sigma2=" << c.sigma2
        << " patch_radius=" << c.patch_radius << " light_fraction=" << c.light_fraction
        << " boundary_clusters=" << c.boundary_clusters << " seed=" << c.seed
        << " depth_inverted=" << (c.depth_inverted ? 1 : 0);
    return out.str();
}

}  // namespace cdcp::harness
