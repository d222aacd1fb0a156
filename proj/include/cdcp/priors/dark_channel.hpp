#pragma once

#include "cdcp/core/types.hpp"

namespace cdcp::priors {

struct DarkChannelParams {
    int patch_radius = 7;          // window is (2r+1) x (2r+1), clamped at borders
    double light_fraction = 0.001;  // share of brightest dark-channel pixels

    void validate() const;
};

struct AtmosphericLight {
    Color3 rgb{1.0, 1.0, 1.0};  // every channel kept >= 0.05 so ratios stay bounded
};

// Minimum over color channels of the windowed minimum around each pixel.
ScalarMap dark_channel(const RgbImage& image, const DarkChannelParams& params);

// Mean color of the pixels with the brightest dark-channel values (the haziest
// candidates), channel-clamped to >= 0.05. Ties at the selection boundary are
// broken by pixel index so the estimate never depends on sort internals.
AtmosphericLight atmospheric_light(const RgbImage& image, const ScalarMap& dark,
                                   const DarkChannelParams& params);

// 1 - windowed min over channels of I/A, clamped to [0,1]. The raw variant
// feeds tests and the identity t_raw == 1 - dark_channel when A == (1,1,1);
// transmission_map is the min-max normalized version the pipeline consumes.
ScalarMap transmission_raw(const RgbImage& image, const AtmosphericLight& light,
                           const DarkChannelParams& params);
SaliencyMap transmission_map(const RgbImage& image, const AtmosphericLight& light,
                             const DarkChannelParams& params);

// Windowed minimum of a scalar map, exposed for reuse and direct testing.
ScalarMap window_min(const ScalarMap& map, int radius);

}  // namespace cdcp::priors
