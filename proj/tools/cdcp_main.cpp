// cdcp: RGB-D salient object detection from center and dark-channel priors.
// Verbs: detect, eval, ablation, fixtures, bench.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "cdcp/harness/fixtures.hpp"
#include "cdcp/harness/reports.hpp"
#include "cdcp/imaging/color.hpp"
#include "cdcp/imaging/io.hpp"
#include "cdcp/priors/center_prior.hpp"
#include "cdcp/priors/dark_channel.hpp"

namespace fs = std::filesystem;
using namespace cdcp;

namespace {

constexpr int kExitSkips = 2;

struct ConfigFlags {
    std::string config_path;
    std::optional<int> region_count;
    std::optional<double> sigma2;
    std::optional<int> patch_radius;
    std::optional<double> light_fraction;
    std::optional<int> boundary_clusters;
    std::optional<uint64_t> seed;
    std::optional<bool> depth_inverted;

    harness::PipelineConfig resolve() const {
        harness::PipelineConfig c = harness::resolve_config(config_path);
        if (region_count) c.region_count = *region_count;
        if (sigma2) c.sigma2 = *sigma2;
        if (patch_radius) c.patch_radius = *patch_radius;
        if (light_fraction) c.light_fraction = *light_fraction;
        if (boundary_clusters) c.boundary_clusters = *boundary_clusters;
        if (seed) c.seed = *seed;
        if (depth_inverted) c.depth_inverted = *depth_inverted;
        c.validate();
        return c;
    }
};

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key=value config file (or set CDCP_CONFIG)");
    cmd->add_option("--regions,-K", flags.region_count, "k-means region count");
    cmd->add_option("--sigma2", flags.sigma2, "spatial weight strength");
    cmd->add_option("--patch-radius", flags.patch_radius, "dark channel window radius");
    cmd->add_option("--light-fraction", flags.light_fraction, "atmospheric light pixel share");
    cmd->add_option("--boundary-clusters,-B", flags.boundary_clusters, "border color clusters");
    cmd->add_option("--seed", flags.seed, "RNG seed");
    cmd->add_flag("--depth-inverted", [&flags](int64_t) { flags.depth_inverted = true; },
                  "dataset stores near = large");
}

void print_skips(const std::vector<harness::SkipEntry>& skipped) {
    for (const harness::SkipEntry& s : skipped)
        std::cerr << "skip: " << s.stem << " (missing " << s.missing << ")\n";
}

int run_detect(const std::string& dataset, const std::string& layout_name,
               const std::string& out_dir, const ConfigFlags& flags, int jobs, bool debug) {
    const harness::PipelineConfig config = flags.resolve();
    const harness::DatasetIndex index =
        harness::discover_dataset(dataset, harness::layout_from_name(layout_name));
    print_skips(index.skipped);

    struct Slot {
        SaliencyMap refined;
        metrics::EvalReport report;
        bool flat_depth = false;
        SaliencyMap s1, dark, transmission, center, labels;
        saliency::RegionSaliency regions;
    };
    std::vector<Slot> slots(index.samples.size());
    harness::parallel_for(index.samples.size(), jobs, [&](size_t i) {
        harness::PipelineResult r = harness::run_pipeline(index.samples[i], config);
        Slot& slot = slots[i];
        slot.refined = std::move(r.stages.refined);
        slot.report = r.report;
        slot.flat_depth = r.flat_depth;
        if (debug) {
            slot.s1 = std::move(r.stages.initial);
            slot.dark = std::move(r.dark);
            slot.transmission = std::move(r.transmission);
            slot.center = std::move(r.center);
            slot.regions = std::move(r.regions);
            std::vector<double> shade(r.seg.region_count);
            for (int k = 0; k < r.seg.region_count; ++k)
                shade[k] = r.seg.region_count == 1
                               ? 0.0
                               : static_cast<double>(k) / (r.seg.region_count - 1);
            slot.labels = segmentation::paint_regions(r.seg, shade);
        }
    });

    fs::create_directories(out_dir);
    std::vector<harness::ImageRow> rows;
    std::vector<metrics::EvalReport> reports;
    for (size_t i = 0; i < slots.size(); ++i) {
        const std::string& stem = index.samples[i].stem;
        imaging::save_gray_png(slots[i].refined, (fs::path(out_dir) / (stem + ".png")).string());
        if (debug) {
            const fs::path dbg = fs::path(out_dir) / "debug";
            fs::create_directories(dbg);
            imaging::save_gray_png(slots[i].s1, (dbg / (stem + "_s1.png")).string());
            imaging::save_gray_png(slots[i].dark, (dbg / (stem + "_dark.png")).string());
            imaging::save_gray_png(slots[i].transmission,
                                   (dbg / (stem + "_transmission.png")).string());
            imaging::save_gray_png(slots[i].center, (dbg / (stem + "_center.png")).string());
            imaging::save_gray_png(slots[i].labels, (dbg / (stem + "_labels.png")).string());
            harness::write_region_csv((dbg / (stem + "_regions.csv")).string(),
                                      slots[i].regions);
        }
        rows.push_back({stem, slots[i].report.mae, slots[i].report.f_max,
                        slots[i].report.f_adaptive, slots[i].flat_depth});
        reports.push_back(slots[i].report);
    }

    const metrics::EvalReport agg = metrics::aggregate(reports);
    harness::write_per_image_csv((fs::path(out_dir) / "per_image.csv").string(), rows);
    harness::write_curves_csv((fs::path(out_dir) / "curves.csv").string(), agg);
    harness::write_summary_csv((fs::path(out_dir) / "summary.csv").string(), index.name,
                               static_cast<int>(index.samples.size()),
                               static_cast<int>(index.skipped.size()), agg);
    if (!index.skipped.empty())
        harness::write_skip_report((fs::path(out_dir) / "skipped.csv").string(), index.skipped);

    std::cout << index.name << ": " << index.samples.size() << " images, mae=" << agg.mae
              << " f_max=" << agg.f_max << " f_adaptive=" << agg.f_adaptive << "\n";
    std::cout << "config: " << harness::config_summary(config) << "\n";
    return index.skipped.empty() ? 0 : kExitSkips;
}

int run_eval(const std::string& dataset, const std::string& maps_dir,
             const std::string& layout_name, const std::string& out_dir) {
    const harness::DatasetIndex index =
        harness::discover_dataset(dataset, harness::layout_from_name(layout_name));
    print_skips(index.skipped);

    std::vector<harness::ImageRow> rows;
    std::vector<metrics::EvalReport> reports;
    std::vector<harness::SkipEntry> missing = index.skipped;
    for (const harness::Sample& sample : index.samples) {
        const fs::path map_path = fs::path(maps_dir) / (sample.stem + ".png");
        if (!fs::exists(map_path)) {
            missing.push_back({sample.stem, "map"});
            std::cerr << "skip: " << sample.stem << " (missing map)\n";
            continue;
        }
        const SaliencyMap map = imaging::load_gray(map_path.string());
        const GroundTruth gt = imaging::load_ground_truth(sample.gt_path);
        const metrics::EvalReport report = metrics::evaluate(map, gt);
        rows.push_back({sample.stem, report.mae, report.f_max, report.f_adaptive, false});
        reports.push_back(report);
    }
    if (reports.empty()) throw Error("eval: no maps matched the dataset");

    const metrics::EvalReport agg = metrics::aggregate(reports);
    fs::create_directories(out_dir);
    harness::write_per_image_csv((fs::path(out_dir) / "per_image.csv").string(), rows);
    harness::write_curves_csv((fs::path(out_dir) / "curves.csv").string(), agg);
    harness::write_summary_csv((fs::path(out_dir) / "summary.csv").string(), index.name,
                               static_cast<int>(rows.size()), static_cast<int>(missing.size()),
                               agg);
    if (!missing.empty())
        harness::write_skip_report((fs::path(out_dir) / "skipped.csv").string(), missing);

    std::cout << index.name << ": " << rows.size() << " maps, mae=" << agg.mae
              << " f_max=" << agg.f_max << " f_adaptive=" << agg.f_adaptive << "\n";
    return missing.empty() ? 0 : kExitSkips;
}

int run_ablation_cmd(const std::string& dataset, const std::string& layout_name,
                     const std::string& out_dir, const ConfigFlags& flags, int jobs) {
    const harness::PipelineConfig config = flags.resolve();
    const harness::DatasetIndex index =
        harness::discover_dataset(dataset, harness::layout_from_name(layout_name));
    print_skips(index.skipped);

    const harness::AblationReport report = harness::run_ablation(index, config, jobs, out_dir);
    std::cout << harness::format_ablation_table(report);
    if (!out_dir.empty())
        harness::write_ablation_csv((fs::path(out_dir) / "ablation.csv").string(), report);
    return index.skipped.empty() ? 0 : kExitSkips;
}

int run_fixtures(const std::string& out_dir, int n, uint64_t seed) {
    const harness::FixtureSet set = harness::generate_fixtures(out_dir, n, seed);
    std::cout << "wrote " << set.index.samples.size() << " triples and " << set.hazefree.size()
              << " haze-free images under " << out_dir << "\n";
    return 0;
}

int run_bench(int width, int height, int runs, const ConfigFlags& flags) {
    const harness::PipelineConfig config = flags.resolve();
    const harness::SyntheticSample sample = harness::render_detection_scene(width, height, 7);

    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) {
        return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
    };

    double best_total = 1e18;
    for (int run = 0; run < runs; ++run) {
        const auto t0 = clock::now();
        const LabImage lab = imaging::rgb_to_lab(sample.rgb);
        const auto t1 = clock::now();
        const auto seg = segmentation::kmeans_segment(lab, config.region_count, config.seed);
        const auto t2 = clock::now();
        const auto table = segmentation::region_stats(seg, lab, sample.depth);
        const auto regions = saliency::compute_region_saliency(table, config.sigma2);
        const SaliencyMap s1 = saliency::initial_saliency(seg, regions);
        const auto t3 = clock::now();
        const SaliencyMap center = priors::center_saliency(
            lab, seg, table, config.boundary_clusters, config.sigma2, config.seed);
        const auto t4 = clock::now();
        const priors::DarkChannelParams dc{config.patch_radius, config.light_fraction};
        const ScalarMap dark = priors::dark_channel(sample.rgb, dc);
        const auto light = priors::atmospheric_light(sample.rgb, dark, dc);
        const SaliencyMap transmission = priors::transmission_map(sample.rgb, light, dc);
        const auto t5 = clock::now();
        const auto stages = fusion::fuse_stages(s1, sample.depth, center, transmission);
        const auto t6 = clock::now();
        const auto report = metrics::evaluate(stages.refined, sample.gt);
        const auto t7 = clock::now();

        const double total = ms(t7 - t0);
        best_total = std::min(best_total, total);
        std::cout << "run " << run << " (" << width << "x" << height << "): total " << total
                  << " ms | lab " << ms(t1 - t0) << " | kmeans " << ms(t2 - t1) << " (iters "
                  << seg.region_count << " regions) | contrast " << ms(t3 - t2) << " | center "
                  << ms(t4 - t3) << " | darkchannel " << ms(t5 - t4) << " | fusion "
                  << ms(t6 - t5) << " | eval " << ms(t7 - t6) << " | f_max " << report.f_max
                  << "\n";
    }
    std::cout << "best total: " << best_total << " ms\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RGB-D salient object detection (center + dark-channel priors)"};
    app.require_subcommand(1);

    std::string dataset, maps_dir, layout = "auto", out_dir;
    int jobs = 1;
    bool debug = false;
    ConfigFlags flags;

    CLI::App* detect = app.add_subcommand("detect", "run the pipeline over a dataset");
    detect->add_option("dataset", dataset, "dataset root directory")->required();
    detect->add_option("--out", out_dir, "output directory")->default_val("cdcp_out");
    detect->add_option("--layout", layout, "auto | flat-suffix | subdirs");
    detect->add_option("--jobs", jobs, "worker threads");
    detect->add_flag("--debug", debug, "also write stage/prior maps and region tables");
    add_config_flags(detect, flags);

    CLI::App* eval = app.add_subcommand("eval", "evaluate saved maps against ground truth");
    eval->add_option("dataset", dataset, "dataset root directory")->required();
    eval->add_option("maps", maps_dir, "directory of <stem>.png saliency maps")->required();
    eval->add_option("--out", out_dir, "output directory")->default_val("cdcp_eval");
    eval->add_option("--layout", layout, "auto | flat-suffix | subdirs");

    CLI::App* ablation = app.add_subcommand("ablation", "evaluate each fusion stage");
    ablation->add_option("dataset", dataset, "dataset root directory")->required();
    ablation->add_option("--out", out_dir, "stage map + csv output directory");
    ablation->add_option("--layout", layout, "auto | flat-suffix | subdirs");
    ablation->add_option("--jobs", jobs, "worker threads");
    add_config_flags(ablation, flags);

    int fixture_n = 10;
    uint64_t fixture_seed = 0;
    CLI::App* fixtures = app.add_subcommand("fixtures", "generate synthetic rgb/depth/gt triples");
    fixtures->add_option("--n", fixture_n, "number of triples");
    fixtures->add_option("--seed", fixture_seed, "generator seed");
    fixtures->add_option("--out", out_dir, "output directory")->required();

    int bench_w = 640, bench_h = 480, bench_runs = 3;
    CLI::App* bench = app.add_subcommand("bench", "time each pipeline stage");
    bench->add_option("--width", bench_w, "image width");
    bench->add_option("--height", bench_h, "image height");
    bench->add_option("--runs", bench_runs, "repetitions");
    add_config_flags(bench, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (detect->parsed()) return run_detect(dataset, layout, out_dir, flags, jobs, debug);
        if (eval->parsed()) return run_eval(dataset, maps_dir, layout, out_dir);
        if (ablation->parsed()) return run_ablation_cmd(dataset, layout, out_dir, flags, jobs);
        if (fixtures->parsed()) return run_fixtures(out_dir, fixture_n, fixture_seed);
        if (bench->parsed()) return run_bench(bench_w, bench_h, bench_runs, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
