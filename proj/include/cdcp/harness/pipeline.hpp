#pragma once

#include <array>
#include <functional>

#include "cdcp/fusion/fusion.hpp"
#include "cdcp/harness/config.hpp"
#include "cdcp/harness/dataset.hpp"
#include "cdcp/metrics/metrics.hpp"
#include "cdcp/saliency/region_contrast.hpp"
#include "cdcp/segmentation/kmeans.hpp"

namespace cdcp::harness {

struct PipelineResult {
    std::string stem;
    fusion::FusionStages stages;
    metrics::EvalReport report;            // final map vs ground truth
    SaliencyMap center;                    // normalized center prior
    SaliencyMap transmission;              // normalized transmission prior
    ScalarMap dark;                        // dark channel (debug export)
    segmentation::RegionSegmentation seg;
    segmentation::RegionTable table;
    saliency::RegionSaliency regions;
    bool flat_depth = false;
};

// Full per-image pass: load, convert, segment, region contrast, priors,
// fusion, evaluation. When out_dir is non-empty the final map is written there
// as <stem>.png. Errors from any stage are rethrown with the stem attached.
PipelineResult run_pipeline(const Sample& sample, const PipelineConfig& config,
                            const std::string& out_dir = "");

// Same pass for an already-loaded image (fixture benchmarking, tests).
PipelineResult run_pipeline_on(const RgbImage& rgb, const DepthMap& depth,
                               const GroundTruth* gt, const PipelineConfig& config);

inline constexpr std::array<const char*, 5> kStageLabels = {"S_1", "D_dce", "S_cdcp", "S", "S_f"};

// Progressive fusion, one ingredient per row; the last two rows are exactly
// the pipeline's fused and final maps:
//   S_1     Norm(s1)
//   D_dce   Norm((1 - exp(-(s1+dce))) * s1)
//   S_cdcp  Norm((1 - exp(-(s1+dce+cdp))) * s1)
//   S       Norm(fused)
//   S_f     refined
std::array<SaliencyMap, 5> ablation_stage_maps(const fusion::FusionStages& stages);

struct AblationRow {
    std::string label;
    double f_max = 0.0;
    double f_adaptive = 0.0;
    double mae = 0.0;
};

struct AblationReport {
    std::vector<AblationRow> rows;  // S_1, D_dce, S_cdcp, S, S_f
    int images = 0;
};

// Runs the pipeline over the whole index and evaluates each cumulative stage
// map; optional out_dir receives the five stage PNGs per image.
AblationReport run_ablation(const DatasetIndex& index, const PipelineConfig& config, int jobs = 1,
                            const std::string& out_dir = "");

// Tiny worker pool: workers pull sample indices, results land in caller-owned
// slots, so output order never depends on scheduling. jobs <= 1 runs inline.
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body);

}  // namespace cdcp::harness
