#pragma once

#include "cdcp/segmentation/region_table.hpp"

namespace cdcp::saliency {

using segmentation::RegionSegmentation;
using segmentation::RegionStats;
using segmentation::RegionTable;

// Row-major K*K matrix of exp(-centroid_distance / sigma2). Symmetric with a
// unit diagonal; the diagonal never enters the contrast sums.
std::vector<double> spatial_weights(const RegionTable& table, double sigma2);

// Area-weighted global contrast, one value per region: the sum over all other
// regions of area * spatial_weight * distance, with distance measured in Lab
// for the color variant and as |mean depth difference| for the depth variant.
std::vector<double> color_saliency(const RegionTable& table, const std::vector<double>& weights);
std::vector<double> depth_saliency(const RegionTable& table, const std::vector<double>& weights);

struct DepthWeights {
    std::vector<double> values;
    bool flat_depth = false;  // all region mean depths equal; values fall back to 1
};

// (max_depth - d_k) ^ (1 / (max_depth - min_depth)) with the extrema taken
// over region mean depths, so nearer regions weigh more.
DepthWeights depth_weights(const RegionTable& table);

// Center-and-depth weight per region: inverted min-max-normalized centroid
// distance to the image center, divided by the region pixel count, times the
// depth weight.
std::vector<double> center_depth_weights(const RegionTable& table,
                                         const std::vector<double>& depth_weight);

struct RegionSaliency {
    std::vector<double> color_contrast;
    std::vector<double> depth_contrast;
    std::vector<double> depth_weight;
    std::vector<double> center_depth_weight;
    std::vector<double> initial;  // min-max normalized (color + depth) * center weight
    bool flat_depth = false;
};

RegionSaliency compute_region_saliency(const RegionTable& table, double sigma2);

// Paints the per-region initial values onto pixels.
SaliencyMap initial_saliency(const RegionSegmentation& seg, const RegionSaliency& rs);

}  // namespace cdcp::saliency
