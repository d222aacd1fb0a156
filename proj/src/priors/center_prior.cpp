#include "cdcp/priors/center_prior.hpp"

#include <cmath>

#include "cdcp/imaging/normalize.hpp"
#include "cdcp/segmentation/kmeans.hpp"

namespace cdcp::priors {

SaliencyMap center_saliency(const LabImage& lab, const RegionSegmentation& seg,
                            const RegionTable& table, int boundary_clusters, double sigma2,
                            uint64_t seed) {
    if (seg.width != lab.width || seg.height != lab.height)
        throw Error("center_saliency: segmentation is " + size_string(seg.width, seg.height) +
                    " but image is " + size_string(lab.width, lab.height));
    if (boundary_clusters < 1) throw Error("center_saliency: need >= 1 boundary cluster");
    if (sigma2 <= 0.0) throw Error("center_saliency: sigma2 must be positive");

    std::vector<Color3> border_colors;
    std::vector<std::pair<double, double>> border_pos;  // normalized pixel centers
    for (int y = 0; y < lab.height; ++y) {
        for (int x = 0; x < lab.width; ++x) {
            if (x != 0 && y != 0 && x != lab.width - 1 && y != lab.height - 1) continue;
            border_colors.push_back(lab.at(x, y));
            border_pos.emplace_back((x + 0.5) / lab.width, (y + 0.5) / lab.height);
        }
    }

    const int b = std::min<int>(boundary_clusters, static_cast<int>(border_colors.size()));
    segmentation::KmeansResult km = segmentation::kmeans_points(border_colors, b, seed);

    struct Seed {
        Color3 color;
        double cx = 0.0, cy = 0.0;  // where this background candidate sits on the border
        double weight = 0.0;        // its share of border pixels
    };
    std::vector<Seed> seeds(km.cluster_count);
    std::vector<int64_t> counts(km.cluster_count, 0);
    for (size_t i = 0; i < border_colors.size(); ++i) {
        Seed& s = seeds[km.labels[i]];
        s.cx += border_pos[i].first;
        s.cy += border_pos[i].second;
        ++counts[km.labels[i]];
    }
    for (int j = 0; j < km.cluster_count; ++j) {
        seeds[j].color = km.centers[j];
        seeds[j].cx /= static_cast<double>(counts[j]);
        seeds[j].cy /= static_cast<double>(counts[j]);
        seeds[j].weight = static_cast<double>(counts[j]) / static_cast<double>(border_colors.size());
    }

    std::vector<double> score(table.count(), 0.0);
    for (int k = 0; k < table.count(); ++k) {
        const RegionStats& r = table.regions[k];
        double sum = 0.0;
        for (const Seed& s : seeds) {
            const double dx = r.centroid_x - s.cx;
            const double dy = r.centroid_y - s.cy;
            const double spatial = std::exp(-std::sqrt(dx * dx + dy * dy) / sigma2);
            sum += s.weight * color_distance(r.mean_lab, s.color) * spatial;
        }
        score[k] = sum;
    }

    return segmentation::paint_regions(seg, imaging::normalize_values(score));
}

}  // namespace cdcp::priors
