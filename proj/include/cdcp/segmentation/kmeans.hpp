#pragma once

#include <cstdint>

#include "cdcp/core/types.hpp"

namespace cdcp::segmentation {

struct RegionSegmentation {
    int width = 0;
    int height = 0;
    int region_count = 0;
    std::vector<int32_t> labels;  // row-major, values in [0, region_count)

    int32_t label_at(int x, int y) const { return labels[static_cast<size_t>(y) * width + x]; }
};

struct KmeansResult {
    std::vector<Color3> centers;
    std::vector<int32_t> labels;
    int cluster_count = 0;  // may be below the requested k on degenerate inputs
    int iterations = 0;
};

// Plain Lloyd k-means over color triples with k-means++ seeding. Deterministic
// for a fixed seed: ties in assignment go to the lowest cluster index, empty
// clusters are re-seeded to the point farthest from its current center, and
// iteration stops when no center moves more than 1e-4 or after 100 rounds.
// Clusters that still own no point at the end are dropped and labels
// compacted, so cluster_count can fall below k when the input has fewer
// distinct values than requested.
KmeansResult kmeans_points(const std::vector<Color3>& points, int k, uint64_t seed);

// Segments an image by clustering its Lab pixels (k >= 2, k <= pixel count).
RegionSegmentation kmeans_segment(const LabImage& lab, int k, uint64_t seed);

}  // namespace cdcp::segmentation
