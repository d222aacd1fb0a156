#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdcp/core/types.hpp"
#include "cdcp/harness/dataset.hpp"

namespace cdcp::harness {

struct SyntheticSample {
    RgbImage rgb;
    DepthMap depth;
    GroundTruth gt;
};

// One detection scene: a saturated disk or rectangle near the image center
// over a bright desaturated gradient background, nearer in depth than
// everything behind it. The ground truth is the exact shape mask.
SyntheticSample render_detection_scene(int width, int height, uint64_t seed);

// Outdoor-like haze-free scene: a mosaic of saturated patches (every patch
// color has one near-zero channel) with mild shading, so the windowed dark
// channel stays low the way it does on clear natural photos.
RgbImage render_hazefree_scene(int width, int height, uint64_t seed);

struct FixtureSet {
    DatasetIndex index;                  // the n detection triples, subdirs layout
    std::vector<std::string> hazefree;   // paths of the haze-free subset
};

inline constexpr int kHazefreeCount = 24;
inline constexpr int kFixtureWidth = 320;
inline constexpr int kFixtureHeight = 240;

// Writes n triples under out_dir/{RGB,depth,GT} (depth as 16-bit PNG) plus the
// haze-free subset under out_dir/hazefree. Deterministic bytes for a fixed
// (n, seed): every sample derives its own child seed from the pair.
FixtureSet generate_fixtures(const std::string& out_dir, int n, uint64_t seed);

}  // namespace cdcp::harness
