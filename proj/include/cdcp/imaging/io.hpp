#pragma once

#include <string>
#include <utility>

#include "cdcp/core/types.hpp"

namespace cdcp::imaging {

struct RgbdPair {
    RgbImage rgb;
    DepthMap depth;
};

// Decodes a color image (PNG or JPEG, 8- or 16-bit, gray or color) to [0,1]
// channels and a depth image (PNG, 8- or 16-bit gray) scaled by the maximum
// representable value of its bit depth. `invert_depth` flips the convention
// to larger = farther for datasets stored the other way around. Throws Error
// naming the offending path on decode failure and naming both sizes when the
// two rasters disagree.
RgbdPair load_rgbd(const std::string& rgb_path, const std::string& depth_path,
                   bool invert_depth = false);

RgbImage load_rgb(const std::string& path);
ScalarMap load_gray(const std::string& path);

// Binarizes at half the representable maximum, i.e. value >= 128 for 8-bit
// masks (and >= 32768 for 16-bit ones).
GroundTruth load_ground_truth(const std::string& path);

// Writes an 8-bit grayscale PNG with values round(v * 255). Input values are
// clamped to [0,1] first so callers can pass raw maps.
void save_gray_png(const ScalarMap& map, const std::string& path);

// Writes an 8-bit RGB PNG, channels clamped to [0,1].
void save_rgb_png(const RgbImage& image, const std::string& path);

void save_gray16_png(const ScalarMap& map, const std::string& path);

}  // namespace cdcp::imaging
