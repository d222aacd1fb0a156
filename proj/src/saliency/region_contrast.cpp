#include "cdcp/saliency/region_contrast.hpp"

#include <cmath>

#include "cdcp/imaging/normalize.hpp"

namespace cdcp::saliency {

namespace {

void require_matching(const RegionTable& table, const std::vector<double>& v, const char* what) {
    if (static_cast<int>(v.size()) != table.count())
        throw Error(std::string(what) + ": " + std::to_string(v.size()) + " values for " +
                    std::to_string(table.count()) + " regions");
}

std::vector<double> contrast_sum(const RegionTable& table, const std::vector<double>& weights,
                                 bool use_color) {
    const int k = table.count();
    std::vector<double> out(k, 0.0);
    for (int a = 0; a < k; ++a) {
        double sum = 0.0;
        for (int b = 0; b < k; ++b) {
            if (b == a) continue;
            const double dist =
                use_color ? color_distance(table.regions[a].mean_lab, table.regions[b].mean_lab)
                          : std::abs(table.regions[a].mean_depth - table.regions[b].mean_depth);
            sum += table.regions[b].area_ratio * weights[static_cast<size_t>(a) * k + b] * dist;
        }
        out[a] = sum;
    }
    return out;
}

}  // namespace

std::vector<double> spatial_weights(const RegionTable& table, double sigma2) {
    if (sigma2 <= 0.0) throw Error("spatial_weights: sigma2 must be positive");
    const int k = table.count();
    std::vector<double> w(static_cast<size_t>(k) * k, 1.0);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const double dx = table.regions[a].centroid_x - table.regions[b].centroid_x;
            const double dy = table.regions[a].centroid_y - table.regions[b].centroid_y;
            const double value = std::exp(-std::sqrt(dx * dx + dy * dy) / sigma2);
            w[static_cast<size_t>(a) * k + b] = value;
            w[static_cast<size_t>(b) * k + a] = value;
        }
    }
    return w;
}

std::vector<double> color_saliency(const RegionTable& table, const std::vector<double>& weights) {
    if (weights.size() != static_cast<size_t>(table.count()) * table.count())
        throw Error("color_saliency: weight matrix size mismatch");
    return contrast_sum(table, weights, true);
}

std::vector<double> depth_saliency(const RegionTable& table, const std::vector<double>& weights) {
    if (weights.size() != static_cast<size_t>(table.count()) * table.count())
        throw Error("depth_saliency: weight matrix size mismatch");
    return contrast_sum(table, weights, false);
}

DepthWeights depth_weights(const RegionTable& table) {
    const int k = table.count();
    DepthWeights dw;
    dw.values.assign(k, 1.0);
    double lo = table.regions[0].mean_depth;
    double hi = lo;
    for (const RegionStats& r : table.regions) {
        lo = std::min(lo, r.mean_depth);
        hi = std::max(hi, r.mean_depth);
    }
    if (hi == lo) {
        dw.flat_depth = true;  // no depth contrast to exploit; keep weights neutral
        return dw;
    }
    const double mu = 1.0 / (hi - lo);
    for (int a = 0; a < k; ++a) dw.values[a] = std::pow(hi - table.regions[a].mean_depth, mu);
    return dw;
}

std::vector<double> center_depth_weights(const RegionTable& table,
                                         const std::vector<double>& depth_weight) {
    require_matching(table, depth_weight, "center_depth_weights");
    const int k = table.count();
    std::vector<double> dist(k);
    for (int a = 0; a < k; ++a) {
        const double dx = table.regions[a].centroid_x - 0.5;
        const double dy = table.regions[a].centroid_y - 0.5;
        dist[a] = std::sqrt(dx * dx + dy * dy);
    }
    const std::vector<double> norm = imaging::normalize_values(dist);
    std::vector<double> out(k);
    for (int a = 0; a < k; ++a)
        out[a] = (1.0 - norm[a]) / static_cast<double>(table.regions[a].pixel_count) *
                 depth_weight[a];
    return out;
}

RegionSaliency compute_region_saliency(const RegionTable& table, double sigma2) {
    RegionSaliency rs;
    const std::vector<double> w = spatial_weights(table, sigma2);
    rs.color_contrast = color_saliency(table, w);
    rs.depth_contrast = depth_saliency(table, w);
    DepthWeights dw = depth_weights(table);
    rs.flat_depth = dw.flat_depth;
    rs.depth_weight = std::move(dw.values);
    rs.center_depth_weight = center_depth_weights(table, rs.depth_weight);

    std::vector<double> combined(table.count());
    for (int a = 0; a < table.count(); ++a)
        combined[a] = (rs.color_contrast[a] + rs.depth_contrast[a]) * rs.center_depth_weight[a];
    rs.initial = imaging::normalize_values(combined);
    return rs;
}

SaliencyMap initial_saliency(const RegionSegmentation& seg, const RegionSaliency& rs) {
    return segmentation::paint_regions(seg, rs.initial);
}

}  // namespace cdcp::saliency
