#pragma once

#include "cdcp/core/types.hpp"
#include "cdcp/segmentation/kmeans.hpp"

namespace cdcp::segmentation {

struct RegionStats {
    Color3 mean_lab{0.0, 0.0, 0.0};
    double mean_depth = 0.0;
    double centroid_x = 0.0;  // normalized pixel-center coordinates in (0,1)
    double centroid_y = 0.0;
    int64_t pixel_count = 0;
    double area_ratio = 0.0;
};

struct RegionTable {
    int image_width = 0;
    int image_height = 0;
    std::vector<RegionStats> regions;

    int count() const { return static_cast<int>(regions.size()); }
};

// Per-region mean Lab color, mean depth, normalized centroid ((x+0.5)/W so a
// whole-image region centers at exactly 0.5), pixel count, and area share.
// Area ratios sum to 1 and every region owns at least one pixel.
RegionTable region_stats(const RegionSegmentation& seg, const LabImage& lab,
                         const DepthMap& depth);

// Paints per-region values back onto pixels.
ScalarMap paint_regions(const RegionSegmentation& seg, const std::vector<double>& values);

}  // namespace cdcp::segmentation
