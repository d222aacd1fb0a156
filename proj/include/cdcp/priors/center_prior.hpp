#pragma once

#include <cstdint>

#include "cdcp/segmentation/region_table.hpp"

namespace cdcp::priors {

using segmentation::RegionSegmentation;
using segmentation::RegionStats;
using segmentation::RegionTable;

// Boundary-seeded background contrast map. Border-pixel colors are clustered
// into a few background candidates; every region is then scored by how far its
// mean color sits from each candidate, discounted with distance to where that
// candidate lives on the border. Regions resembling the border score near 0,
// distinct interior regions score high. Min-max normalized, painted per region.
SaliencyMap center_saliency(const LabImage& lab, const RegionSegmentation& seg,
                            const RegionTable& table, int boundary_clusters, double sigma2,
                            uint64_t seed);

}  // namespace cdcp::priors
