#include "cdcp/segmentation/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cdcp/core/rng.hpp"

namespace cdcp::segmentation {

namespace {

constexpr double kMovementThreshold = 1e-4;
constexpr int kMaxIterations = 100;

double sq_dist(const Color3& a, const Color3& b) {
    const double d0 = a[0] - b[0];
    const double d1 = a[1] - b[1];
    const double d2 = a[2] - b[2];
    return d0 * d0 + d1 * d1 + d2 * d2;
}

std::vector<Color3> plus_plus_init(const std::vector<Color3>& points, int k, Rng& rng) {
    const size_t n = points.size();
    std::vector<Color3> centers;
    centers.reserve(k);
    centers.push_back(points[rng.next_index(n)]);

    std::vector<double> best(n);
    for (size_t i = 0; i < n; ++i) best[i] = sq_dist(points[i], centers[0]);

    std::vector<double> cumulative(n);
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (size_t i = 0; i < n; ++i) {
            total += best[i];
            cumulative[i] = total;
        }
        size_t pick;
        if (total > 0.0) {
            const double r = rng.next_double() * total;
            pick = static_cast<size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), r) - cumulative.begin());
            if (pick >= n) pick = n - 1;
        } else {
            // All residual distances are zero; any point duplicates a center.
            pick = rng.next_index(n);
        }
        centers.push_back(points[pick]);
        for (size_t i = 0; i < n; ++i) best[i] = std::min(best[i], sq_dist(points[i], centers.back()));
    }
    return centers;
}

}  // namespace

KmeansResult kmeans_points(const std::vector<Color3>& points, int k, uint64_t seed) {
    const size_t n = points.size();
    if (k < 1) throw Error("kmeans: cluster count must be >= 1, got " + std::to_string(k));
    if (static_cast<size_t>(k) > n)
        throw Error("kmeans: cluster count " + std::to_string(k) + " exceeds point count " +
                    std::to_string(n));

    Rng rng(seed);
    std::vector<Color3> centers = plus_plus_init(points, k, rng);
    std::vector<int32_t> labels(n, 0);
    std::vector<double> nearest(n, 0.0);  // squared distance to the assigned center

    int iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        for (size_t i = 0; i < n; ++i) {
            int32_t best_c = 0;
            double best_d = sq_dist(points[i], centers[0]);
            for (int c = 1; c < k; ++c) {
                const double d = sq_dist(points[i], centers[c]);
                if (d < best_d) {
                    best_d = d;
                    best_c = c;
                }
            }
            labels[i] = best_c;
            nearest[i] = best_d;
        }

        std::vector<Color3> sums(k, Color3{0.0, 0.0, 0.0});
        std::vector<int64_t> counts(k, 0);
        for (size_t i = 0; i < n; ++i) {
            const Color3& p = points[i];
            Color3& s = sums[labels[i]];
            s[0] += p[0];
            s[1] += p[1];
            s[2] += p[2];
            ++counts[labels[i]];
        }

        double movement = 0.0;
        for (int c = 0; c < k; ++c) {
            Color3 next;
            if (counts[c] > 0) {
                next = {sums[c][0] / counts[c], sums[c][1] / counts[c], sums[c][2] / counts[c]};
            } else {
                // Re-seed a starved cluster to the point worst served so far.
                size_t far_i = 0;
                for (size_t i = 1; i < n; ++i)
                    if (nearest[i] > nearest[far_i]) far_i = i;
                next = points[far_i];
                nearest[far_i] = 0.0;  // so a second starved cluster picks elsewhere
            }
            movement = std::max(movement, std::sqrt(sq_dist(centers[c], next)));
            centers[c] = next;
        }
        if (movement < kMovementThreshold) {
            ++iter;
            break;
        }
    }

    // Final assignment against the settled centers, then drop empty clusters.
    std::vector<int64_t> counts(k, 0);
    for (size_t i = 0; i < n; ++i) {
        int32_t best_c = 0;
        double best_d = sq_dist(points[i], centers[0]);
        for (int c = 1; c < k; ++c) {
            const double d = sq_dist(points[i], centers[c]);
            if (d < best_d) {
                best_d = d;
                best_c = c;
            }
        }
        labels[i] = best_c;
        ++counts[best_c];
    }

    std::vector<int32_t> remap(k, -1);
    KmeansResult result;
    for (int c = 0; c < k; ++c) {
        if (counts[c] == 0) continue;
        remap[c] = result.cluster_count++;
        result.centers.push_back(centers[c]);
    }
    for (int32_t& l : labels) l = remap[l];
    result.labels = std::move(labels);
    result.iterations = iter;
    return result;
}

RegionSegmentation kmeans_segment(const LabImage& lab, int k, uint64_t seed) {
    if (lab.empty()) throw Error("kmeans_segment: empty image");
    if (k < 2) throw Error("kmeans_segment: need k >= 2, got " + std::to_string(k));
    KmeansResult km = kmeans_points(lab.pixels, k, seed);
    RegionSegmentation seg;
    seg.width = lab.width;
    seg.height = lab.height;
    seg.region_count = km.cluster_count;
    seg.labels = std::move(km.labels);
    return seg;
}

}  // namespace cdcp::segmentation
