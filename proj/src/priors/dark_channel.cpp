#include "cdcp/priors/dark_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdcp/imaging/normalize.hpp"

namespace cdcp::priors {

namespace {

// Sliding-window minimum over one line, window [i-r, i+r] truncated at the
// ends. Monotonic index queue, O(n) per line.
void min_filter_line(const double* src, double* dst, int n, int r, int stride,
                     std::vector<int>& queue) {
    queue.clear();
    queue.resize(static_cast<size_t>(n));
    int head = 0, tail = 0;  // queue[head..tail) holds candidate indices
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int hi = std::min(n - 1, i + r);
        for (; next <= hi; ++next) {
            const double v = src[static_cast<size_t>(next) * stride];
            while (tail > head && src[static_cast<size_t>(queue[tail - 1]) * stride] >= v) --tail;
            queue[tail++] = next;
        }
        while (queue[head] < i - r) ++head;
        dst[static_cast<size_t>(i) * stride] = src[static_cast<size_t>(queue[head]) * stride];
    }
}

ScalarMap min_channel(const RgbImage& image) {
    ScalarMap out(image.width, image.height);
    for (size_t i = 0; i < image.pixels.size(); ++i) {
        const Color3& c = image.pixels[i];
        out.values[i] = std::min({c[0], c[1], c[2]});
    }
    return out;
}

ScalarMap min_ratio_channel(const RgbImage& image, const AtmosphericLight& light) {
    ScalarMap out(image.width, image.height);
    for (size_t i = 0; i < image.pixels.size(); ++i) {
        const Color3& c = image.pixels[i];
        out.values[i] =
            std::min({c[0] / light.rgb[0], c[1] / light.rgb[1], c[2] / light.rgb[2]});
    }
    return out;
}

}  // namespace

void DarkChannelParams::validate() const {
    if (patch_radius < 1)
        throw Error("dark channel: patch_radius must be >= 1, got " +
                    std::to_string(patch_radius));
    if (!(light_fraction > 0.0) || light_fraction > 0.01)
        throw Error("dark channel: light_fraction must be in (0, 0.01], got " +
                    std::to_string(light_fraction));
}

ScalarMap window_min(const ScalarMap& map, int radius) {
    if (radius < 0) throw Error("window_min: negative radius");
    if (map.empty() || radius == 0) return map;
    ScalarMap tmp(map.width, map.height);
    ScalarMap out(map.width, map.height);
    std::vector<int> queue;
    for (int y = 0; y < map.height; ++y)
        min_filter_line(map.values.data() + static_cast<size_t>(y) * map.width,
                        tmp.values.data() + static_cast<size_t>(y) * map.width, map.width, radius,
                        1, queue);
    for (int x = 0; x < map.width; ++x)
        min_filter_line(tmp.values.data() + x, out.values.data() + x, map.height, radius,
                        map.width, queue);
    return out;
}

ScalarMap dark_channel(const RgbImage& image, const DarkChannelParams& params) {
    params.validate();
    if (image.empty()) throw Error("dark_channel: empty image");
    return window_min(min_channel(image), params.patch_radius);
}

AtmosphericLight atmospheric_light(const RgbImage& image, const ScalarMap& dark,
                                   const DarkChannelParams& params) {
    params.validate();
    if (image.width != dark.width || image.height != dark.height)
        throw Error("atmospheric_light: image is " + size_string(image.width, image.height) +
                    " but dark channel is " + size_string(dark.width, dark.height));
    const size_t n = dark.size();
    if (n == 0) throw Error("atmospheric_light: empty input");

    const size_t take = std::max<size_t>(1, static_cast<size_t>(std::ceil(
                                                params.light_fraction * static_cast<double>(n))));
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::partial_sort(order.begin(), order.begin() + take, order.end(),
                      [&](uint32_t a, uint32_t b) {
                          if (dark.values[a] != dark.values[b])
                              return dark.values[a] > dark.values[b];
                          return a < b;
                      });

    Color3 sum{0.0, 0.0, 0.0};
    for (size_t i = 0; i < take; ++i) {
        const Color3& c = image.pixels[order[i]];
        sum[0] += c[0];
        sum[1] += c[1];
        sum[2] += c[2];
    }
    AtmosphericLight light;
    for (int c = 0; c < 3; ++c)
        light.rgb[c] = std::max(0.05, sum[c] / static_cast<double>(take));
    return light;
}

ScalarMap transmission_raw(const RgbImage& image, const AtmosphericLight& light,
                           const DarkChannelParams& params) {
    params.validate();
    for (double c : light.rgb)
        if (!(c > 0.0)) throw Error("transmission: atmospheric light channel must be positive");
    ScalarMap mins = window_min(min_ratio_channel(image, light), params.patch_radius);
    for (double& v : mins.values) v = std::clamp(1.0 - v, 0.0, 1.0);
    return mins;
}

SaliencyMap transmission_map(const RgbImage& image, const AtmosphericLight& light,
                             const DarkChannelParams& params) {
    return imaging::normalize_map(transmission_raw(image, light, params));
}

}  // namespace cdcp::priors
