#pragma once

#include <cstdint>
#include <string>

namespace cdcp::harness {

// Everything tunable in one place so ablations over the knobs are scriptable.
struct PipelineConfig {
    int region_count = 8;          // k-means clusters for region segmentation
    double sigma2 = 0.4;           // spatial-weight strength
    int patch_radius = 7;          // dark-channel window radius (15x15)
    double light_fraction = 0.001; // share of pixels used for atmospheric light
    int boundary_clusters = 3;     // border-color clusters for the center prior
    uint64_t seed = 0;
    bool depth_inverted = false;   // set when a dataset stores near = large

    void validate() const;
};

// Flat key=value text, '#' comments, blank lines ignored. Unknown keys are an
// error so typos do not silently fall back to defaults.
PipelineConfig parse_config_text(const std::string& text, const PipelineConfig& base);
PipelineConfig load_config_file(const std::string& path, const PipelineConfig& base);

// Resolution order: built-in defaults, then the file named by CDCP_CONFIG (if
// set), then an explicit --config file. Flag overrides are applied by the CLI
// after this returns.
PipelineConfig resolve_config(const std::string& explicit_path);

std::string config_summary(const PipelineConfig& config);

}  // namespace cdcp::harness
