#include "cdcp/segmentation/region_table.hpp"

namespace cdcp::segmentation {

RegionTable region_stats(const RegionSegmentation& seg, const LabImage& lab,
                         const DepthMap& depth) {
    if (seg.width != lab.width || seg.height != lab.height)
        throw Error("region_stats: segmentation is " + size_string(seg.width, seg.height) +
                    " but image is " + size_string(lab.width, lab.height));
    if (lab.width != depth.width || lab.height != depth.height)
        throw Error("region_stats: image is " + size_string(lab.width, lab.height) +
                    " but depth is " + size_string(depth.width, depth.height));
    if (seg.region_count < 1) throw Error("region_stats: segmentation has no regions");

    const int k = seg.region_count;
    RegionTable table;
    table.image_width = seg.width;
    table.image_height = seg.height;
    table.regions.resize(k);

    std::vector<double> sum_x(k, 0.0), sum_y(k, 0.0), sum_d(k, 0.0);
    std::vector<Color3> sum_lab(k, Color3{0.0, 0.0, 0.0});

    for (int y = 0; y < seg.height; ++y) {
        for (int x = 0; x < seg.width; ++x) {
            const int32_t r = seg.label_at(x, y);
            if (r < 0 || r >= k)
                throw Error("region_stats: label " + std::to_string(r) + " out of range at " +
                            std::to_string(x) + "," + std::to_string(y));
            RegionStats& stats = table.regions[r];
            ++stats.pixel_count;
            const Color3& c = lab.at(x, y);
            sum_lab[r][0] += c[0];
            sum_lab[r][1] += c[1];
            sum_lab[r][2] += c[2];
            sum_d[r] += depth.at(x, y);
            sum_x[r] += (x + 0.5) / seg.width;
            sum_y[r] += (y + 0.5) / seg.height;
        }
    }

    const double total = static_cast<double>(seg.width) * seg.height;
    for (int r = 0; r < k; ++r) {
        RegionStats& stats = table.regions[r];
        if (stats.pixel_count == 0)
            throw Error("region_stats: region " + std::to_string(r) + " owns no pixels");
        const double n = static_cast<double>(stats.pixel_count);
        stats.mean_lab = {sum_lab[r][0] / n, sum_lab[r][1] / n, sum_lab[r][2] / n};
        stats.mean_depth = sum_d[r] / n;
        stats.centroid_x = sum_x[r] / n;
        stats.centroid_y = sum_y[r] / n;
        stats.area_ratio = n / total;
    }
    return table;
}

ScalarMap paint_regions(const RegionSegmentation& seg, const std::vector<double>& values) {
    if (static_cast<int>(values.size()) != seg.region_count)
        throw Error("paint_regions: " + std::to_string(values.size()) + " values for " +
                    std::to_string(seg.region_count) + " regions");
    ScalarMap out(seg.width, seg.height);
    for (size_t i = 0; i < seg.labels.size(); ++i) out.values[i] = values[seg.labels[i]];
    return out;
}

}  // namespace cdcp::segmentation
