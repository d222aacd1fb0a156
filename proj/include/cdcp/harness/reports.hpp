#pragma once

#include <string>
#include <vector>

#include "cdcp/harness/pipeline.hpp"
#include "cdcp/metrics/metrics.hpp"

namespace cdcp::harness {

struct ImageRow {
    std::string stem;
    double mae = 0.0;
    double f_max = 0.0;
    double f_adaptive = 0.0;
    bool flat_depth = false;
};

// All writers emit deterministic text: fixed column order, %.9g numbers,
// rows already sorted by the caller.
void write_per_image_csv(const std::string& path, const std::vector<ImageRow>& rows);
void write_curves_csv(const std::string& path, const metrics::EvalReport& report);
void write_summary_csv(const std::string& path, const std::string& dataset, int images, int skips,
                       const metrics::EvalReport& report);
void write_ablation_csv(const std::string& path, const AblationReport& report);
void write_skip_report(const std::string& path, const std::vector<SkipEntry>& skipped);

// Per-region dump for one image: k, color contrast, depth contrast, depth
// weight, center-depth weight, initial value.
void write_region_csv(const std::string& path, const saliency::RegionSaliency& regions);

std::string format_ablation_table(const AblationReport& report);

}  // namespace cdcp::harness
