#include "cdcp/harness/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <mutex>
#include <thread>

#include "cdcp/imaging/color.hpp"
#include "cdcp/imaging/io.hpp"
#include "cdcp/imaging/normalize.hpp"
#include "cdcp/priors/center_prior.hpp"
#include "cdcp/priors/dark_channel.hpp"

namespace fs = std::filesystem;

namespace cdcp::harness {

PipelineResult run_pipeline_on(const RgbImage& rgb, const DepthMap& depth, const GroundTruth* gt,
                               const PipelineConfig& config) {
    config.validate();
    if (rgb.width != depth.width || rgb.height != depth.height)
        throw Error("pipeline: rgb is " + size_string(rgb.width, rgb.height) + " but depth is " +
                    size_string(depth.width, depth.height));

    PipelineResult result;
    const LabImage lab = imaging::rgb_to_lab(rgb);

    result.seg = segmentation::kmeans_segment(lab, config.region_count, config.seed);
    result.table = segmentation::region_stats(result.seg, lab, depth);
    result.regions = saliency::compute_region_saliency(result.table, config.sigma2);
    result.flat_depth = result.regions.flat_depth;
    const SaliencyMap s1 = saliency::initial_saliency(result.seg, result.regions);

    result.center = priors::center_saliency(lab, result.seg, result.table,
                                            config.boundary_clusters, config.sigma2, config.seed);

    priors::DarkChannelParams dc{config.patch_radius, config.light_fraction};
    result.dark = priors::dark_channel(rgb, dc);
    const priors::AtmosphericLight light = priors::atmospheric_light(rgb, result.dark, dc);
    result.transmission = priors::transmission_map(rgb, light, dc);

    result.stages = fusion::fuse_stages(s1, depth, result.center, result.transmission);

    if (gt != nullptr) result.report = metrics::evaluate(result.stages.refined, *gt);
    return result;
}

PipelineResult run_pipeline(const Sample& sample, const PipelineConfig& config,
                            const std::string& out_dir) {
    try {
        const imaging::RgbdPair pair =
            imaging::load_rgbd(sample.rgb_path, sample.depth_path, config.depth_inverted);
        const GroundTruth gt = imaging::load_ground_truth(sample.gt_path);
        if (gt.width != pair.rgb.width || gt.height != pair.rgb.height)
            throw Error("ground truth is " + size_string(gt.width, gt.height) + " but rgb is " +
                        size_string(pair.rgb.width, pair.rgb.height));

        PipelineResult result = run_pipeline_on(pair.rgb, pair.depth, &gt, config);
        result.stem = sample.stem;
        if (!out_dir.empty()) {
            fs::create_directories(out_dir);
            imaging::save_gray_png(result.stages.refined,
                                   (fs::path(out_dir) / (sample.stem + ".png")).string());
        }
        return result;
    } catch (const Error& e) {
        throw Error("sample " + sample.stem + ": " + e.what());
    }
}

std::array<SaliencyMap, 5> ablation_stage_maps(const fusion::FusionStages& st) {
    const size_t n = st.initial.size();
    SaliencyMap two(st.initial.width, st.initial.height);
    SaliencyMap three(st.initial.width, st.initial.height);
    for (size_t i = 0; i < n; ++i) {
        const double s1 = st.initial.values[i];
        const double dce = st.depth_cue.values[i];
        const double cdp = st.center_dark.values[i];
        two.values[i] = (1.0 - std::exp(-(s1 + dce))) * s1;
        three.values[i] = (1.0 - std::exp(-(s1 + dce + cdp))) * s1;
    }
    return {imaging::normalize_map(st.initial), imaging::normalize_map(two),
            imaging::normalize_map(three), imaging::normalize_map(st.fused), st.refined};
}

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    const int n = std::min<int>(jobs, static_cast<int>(count));
    threads.reserve(n);
    for (int t = 0; t < n; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

AblationReport run_ablation(const DatasetIndex& index, const PipelineConfig& config, int jobs,
                            const std::string& out_dir) {
    const size_t n = index.samples.size();
    if (n == 0) throw Error("run_ablation: empty dataset index");
    if (!out_dir.empty()) fs::create_directories(out_dir);

    std::vector<std::array<metrics::EvalReport, 5>> per_image(n);
    parallel_for(n, jobs, [&](size_t i) {
        const Sample& sample = index.samples[i];
        const PipelineResult result = run_pipeline(sample, config);
        const GroundTruth gt = imaging::load_ground_truth(sample.gt_path);
        const std::array<SaliencyMap, 5> maps = ablation_stage_maps(result.stages);
        for (int s = 0; s < 5; ++s) per_image[i][s] = metrics::evaluate(maps[s], gt);
        if (!out_dir.empty()) {
            // Export the raw fusion-stage maps themselves (not the cumulative
            // evaluation maps) so each panel can be inspected on its own.
            const std::array<const SaliencyMap*, 5> panels = {
                &result.stages.initial, &result.stages.depth_cue, &result.stages.center_dark,
                &result.stages.fused, &result.stages.refined};
            for (int s = 0; s < 5; ++s)
                imaging::save_gray_png(*panels[s], (fs::path(out_dir) / (sample.stem + "_" +
                                                                          kStageLabels[s] + ".png"))
                                                       .string());
        }
    });

    AblationReport report;
    report.images = static_cast<int>(n);
    for (int s = 0; s < 5; ++s) {
        std::vector<metrics::EvalReport> stage_reports;
        stage_reports.reserve(n);
        for (size_t i = 0; i < n; ++i) stage_reports.push_back(per_image[i][s]);
        const metrics::EvalReport agg = metrics::aggregate(stage_reports);
        report.rows.push_back({kStageLabels[s], agg.f_max, agg.f_adaptive, agg.mae});
    }
    return report;
}

}  // namespace cdcp::harness
