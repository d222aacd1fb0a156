#include "cdcp/harness/reports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cdcp::harness {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps line endings stable
    if (!out) throw Error("cannot write " + path);
    return out;
}

}  // namespace

void write_per_image_csv(const std::string& path, const std::vector<ImageRow>& rows) {
    std::ofstream out = open_out(path);
    out << "stem,mae,f_max,f_adaptive,flat_depth\n";
    for (const ImageRow& r : rows)
        out << r.stem << ',' << num(r.mae) << ',' << num(r.f_max) << ',' << num(r.f_adaptive)
            << ',' << (r.flat_depth ? 1 : 0) << '\n';
}

void write_curves_csv(const std::string& path, const metrics::EvalReport& report) {
    std::ofstream out = open_out(path);
    out << "index,threshold,precision,recall,fpr,tpr,mean_selected\n";
    for (int i = 0; i < metrics::kThresholdCount; ++i)
        out << i << ',' << num(metrics::threshold_level(i)) << ',' << num(report.pr[i].precision)
            << ',' << num(report.pr[i].recall) << ',' << num(report.roc[i].fpr) << ','
            << num(report.roc[i].tpr) << ',' << num(report.selected[i]) << '\n';
}

void write_summary_csv(const std::string& path, const std::string& dataset, int images, int skips,
                       const metrics::EvalReport& report) {
    std::ofstream out = open_out(path);
    out << "dataset,images,skipped,mae,f_max,f_adaptive\n";
    out << dataset << ',' << images << ',' << skips << ',' << num(report.mae) << ','
        << num(report.f_max) << ',' << num(report.f_adaptive) << '\n';
}

void write_ablation_csv(const std::string& path, const AblationReport& report) {
    std::ofstream out = open_out(path);
    out << "# cumulative stages: each row folds one more cue into the fusion\n";
    out << "stage,f_max,f_adaptive,mae\n";
    for (const AblationRow& r : report.rows)
        out << r.label << ',' << num(r.f_max) << ',' << num(r.f_adaptive) << ',' << num(r.mae)
            << '\n';
}

void write_skip_report(const std::string& path, const std::vector<SkipEntry>& skipped) {
    std::ofstream out = open_out(path);
    out << "stem,missing\n";
    for (const SkipEntry& s : skipped) out << s.stem << ',' << s.missing << '\n';
}

void write_region_csv(const std::string& path, const saliency::RegionSaliency& regions) {
    std::ofstream out = open_out(path);
    out << "region,color_contrast,depth_contrast,depth_weight,center_depth_weight,initial\n";
    for (size_t k = 0; k < regions.initial.size(); ++k)
        out << k << ',' << num(regions.color_contrast[k]) << ',' << num(regions.depth_contrast[k])
            << ',' << num(regions.depth_weight[k]) << ',' << num(regions.center_depth_weight[k])
            << ',' << num(regions.initial[k]) << '\n';
}

std::string format_ablation_table(const AblationReport& report) {
    std::ostringstream out;
    out << "stage    f_max     f_adaptive  mae        (cumulative fusion, " << report.images
        << " images)\n";
    for (const AblationRow& r : report.rows) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-8s %-9.4f %-11.4f %-9.4f\n", r.label.c_str(), r.f_max,
                      r.f_adaptive, r.mae);
        out << line;
    }
    return out.str();
}

}  // namespace cdcp::harness
