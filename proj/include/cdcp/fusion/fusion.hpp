#pragma once

#include "cdcp/core/types.hpp"

namespace cdcp::fusion {

// Complement of the depth map, min-max normalized: near pixels get high values.
SaliencyMap depth_cue_enhancement(const DepthMap& depth);

// Pointwise product of the normalized center prior and normalized transmission.
SaliencyMap center_dark_prior(const SaliencyMap& center, const SaliencyMap& transmission);

// (1 - exp(-(s1 + depth_cue + center_dark))) * s1 * center, raw (not renormalized).
SaliencyMap fused_saliency(const SaliencyMap& s1, const SaliencyMap& depth_cue,
                           const SaliencyMap& center_dark, const SaliencyMap& center);

// 1 - exp(-(s1 * center * fused)); the raw variant stays within [0, 1 - 1/e],
// final_saliency min-max normalizes it for output and evaluation.
SaliencyMap final_saliency_raw(const SaliencyMap& s1, const SaliencyMap& center,
                               const SaliencyMap& fused);
SaliencyMap final_saliency(const SaliencyMap& s1, const SaliencyMap& center,
                           const SaliencyMap& fused);

struct FusionStages {
    SaliencyMap initial;      // region-contrast map (s1)
    SaliencyMap depth_cue;    // enhanced depth complement
    SaliencyMap center_dark;  // center prior * transmission
    SaliencyMap fused;        // raw multiplicative-exponential fusion
    SaliencyMap refined;      // final map, normalized
};

FusionStages fuse_stages(const SaliencyMap& s1, const DepthMap& depth, const SaliencyMap& center,
                         const SaliencyMap& transmission);

}  // namespace cdcp::fusion
