#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdcp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Color triple. Component meaning depends on context: (r,g,b) in [0,1] for
// camera images, (L,a,b) with L in [0,100] after CIE conversion.
using Color3 = std::array<double, 3>;

inline double color_distance(const Color3& a, const Color3& b) {
    const double d0 = a[0] - b[0];
    const double d1 = a[1] - b[1];
    const double d2 = a[2] - b[2];
    return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
}

struct ColorImage {
    int width = 0;
    int height = 0;
    std::vector<Color3> pixels;  // row-major, pixels[y * width + x]

    ColorImage() = default;
    ColorImage(int w, int h) : width(w), height(h), pixels(static_cast<size_t>(w) * h) {}

    Color3& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    const Color3& at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    size_t size() const { return pixels.size(); }
    bool empty() const { return pixels.empty(); }
};

struct ScalarMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major

    ScalarMap() = default;
    ScalarMap(int w, int h, double fill = 0.0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    double& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }
    double at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }
};

// The pipeline moves these aliases around so signatures say what a map means.
// RgbImage pixels are (r,g,b) in [0,1]; LabImage pixels are CIE (L,a,b).
// DepthMap values are [0,1] with larger = farther; SaliencyMap values are [0,1].
using RgbImage = ColorImage;
using LabImage = ColorImage;
using DepthMap = ScalarMap;
using SaliencyMap = ScalarMap;

// Binary ground-truth mask: 1 = salient pixel.
struct GroundTruth {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> mask;
    int64_t positive_count = 0;

    size_t size() const { return mask.size(); }
};

inline bool same_size(const ScalarMap& a, const ScalarMap& b) {
    return a.width == b.width && a.height == b.height;
}

inline std::string size_string(int w, int h) {
    return std::to_string(w) + "x" + std::to_string(h);
}

inline void require_same_size(const ScalarMap& a, const ScalarMap& b, const char* what) {
    if (!same_size(a, b))
        throw Error(std::string(what) + ": size mismatch, " + size_string(a.width, a.height) +
                    " vs " + size_string(b.width, b.height));
}

}  // namespace cdcp
