#include "cdcp/fusion/fusion.hpp"

#include <cmath>

#include "cdcp/imaging/normalize.hpp"

namespace cdcp::fusion {

SaliencyMap depth_cue_enhancement(const DepthMap& depth) {
    ScalarMap complement = depth;
    for (double& v : complement.values) v = 1.0 - v;
    return imaging::normalize_map(complement);
}

SaliencyMap center_dark_prior(const SaliencyMap& center, const SaliencyMap& transmission) {
    require_same_size(center, transmission, "center_dark_prior");
    SaliencyMap nc = imaging::normalize_map(center);
    const SaliencyMap nt = imaging::normalize_map(transmission);
    for (size_t i = 0; i < nc.size(); ++i) nc.values[i] *= nt.values[i];
    return nc;
}

SaliencyMap fused_saliency(const SaliencyMap& s1, const SaliencyMap& depth_cue,
                           const SaliencyMap& center_dark, const SaliencyMap& center) {
    require_same_size(s1, depth_cue, "fused_saliency");
    require_same_size(s1, center_dark, "fused_saliency");
    require_same_size(s1, center, "fused_saliency");
    SaliencyMap out(s1.width, s1.height);
    for (size_t i = 0; i < out.size(); ++i) {
        const double gate =
            1.0 - std::exp(-(s1.values[i] + depth_cue.values[i] + center_dark.values[i]));
        out.values[i] = gate * s1.values[i] * center.values[i];
    }
    return out;
}

SaliencyMap final_saliency_raw(const SaliencyMap& s1, const SaliencyMap& center,
                               const SaliencyMap& fused) {
    require_same_size(s1, center, "final_saliency");
    require_same_size(s1, fused, "final_saliency");
    SaliencyMap out(s1.width, s1.height);
    for (size_t i = 0; i < out.size(); ++i)
        out.values[i] = 1.0 - std::exp(-(s1.values[i] * center.values[i] * fused.values[i]));
    return out;
}

SaliencyMap final_saliency(const SaliencyMap& s1, const SaliencyMap& center,
                           const SaliencyMap& fused) {
    return imaging::normalize_map(final_saliency_raw(s1, center, fused));
}

FusionStages fuse_stages(const SaliencyMap& s1, const DepthMap& depth, const SaliencyMap& center,
                         const SaliencyMap& transmission) {
    FusionStages st;
    st.initial = s1;
    st.depth_cue = depth_cue_enhancement(depth);
    st.center_dark = center_dark_prior(center, transmission);
    st.fused = fused_saliency(st.initial, st.depth_cue, st.center_dark, center);
    st.refined = final_saliency(st.initial, center, st.fused);
    return st;
}

}  // namespace cdcp::fusion
