#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "cdcp/imaging/normalize.hpp"
#include "cdcp/saliency/region_contrast.hpp"
#include "cdcp/segmentation/kmeans.hpp"
#include "oracle_helpers.hpp"

using namespace cdcp;
using segmentation::RegionStats;
using segmentation::RegionTable;

namespace {

RegionTable table_of(std::initializer_list<RegionStats> regions) {
    RegionTable t;
    t.image_width = 100;
    t.image_height = 100;
    t.regions = regions;
    return t;
}

RegionStats region(Color3 lab, double depth, double cx, double cy, int64_t pixels, double area) {
    RegionStats r;
    r.mean_lab = lab;
    r.mean_depth = depth;
    r.centroid_x = cx;
    r.centroid_y = cy;
    r.pixel_count = pixels;
    r.area_ratio = area;
    return r;
}

}  // namespace

TEST_CASE("spatial weight closed forms") {
    const RegionTable t = table_of({
        region({0, 0, 0}, 0.5, 0.0, 0.0, 10, 0.5),
        region({0, 0, 0}, 0.5, 1.0, 0.0, 10, 0.5),
    });
    const std::vector<double> w = saliency::spatial_weights(t, 0.4);
    CHECK(w[0] == 1.0);
    CHECK(w[3] == 1.0);
    // exp(-1/0.4), frozen from direct evaluation
    CHECK(w[1] == doctest::Approx(0.0820849986238988).epsilon(1e-12));
    CHECK(w[2] == w[1]);
    CHECK_THROWS_AS(saliency::spatial_weights(t, 0.0), Error);
    CHECK_THROWS_AS(saliency::spatial_weights(t, -1.0), Error);
}

TEST_CASE("spatial weight matrix is symmetric with unit diagonal") {
    Rng rng(5);
    const oracle::RegionInput in = oracle::random_region_input(rng, 7);
    const RegionTable t = oracle::to_table(in);
    const std::vector<double> w = saliency::spatial_weights(t, 0.4);
    for (int a = 0; a < 7; ++a) {
        CHECK(w[a * 7 + a] == 1.0);
        for (int b = 0; b < 7; ++b) CHECK(w[a * 7 + b] == w[b * 7 + a]);
    }
}

TEST_CASE("two-region hand-evaluated contrasts") {
    // Equal areas, Lab distance 10, pairwise weight 0.5 -> s_c = 0.5*0.5*10.
    const RegionTable t = table_of({
        region({30, 0, 0}, 0.2, 0.3, 0.5, 50, 0.5),
        region({40, 0, 0}, 0.8, 0.7, 0.5, 50, 0.5),
    });
    const std::vector<double> w = {1.0, 0.5, 0.5, 1.0};
    const std::vector<double> sc = saliency::color_saliency(t, w);
    CHECK(sc[0] == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(sc[1] == doctest::Approx(2.5).epsilon(1e-12));

    // Depths 0.2/0.8, weight 1 -> s_d = 0.5*0.6.
    const std::vector<double> ones = {1.0, 1.0, 1.0, 1.0};
    const std::vector<double> sd = saliency::depth_saliency(t, ones);
    CHECK(sd[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(sd[1] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("identical colors or depths produce zero contrast") {
    const RegionTable t = table_of({
        region({25, 10, -5}, 0.4, 0.2, 0.2, 10, 0.25),
        region({25, 10, -5}, 0.4, 0.8, 0.4, 20, 0.5),
        region({25, 10, -5}, 0.4, 0.4, 0.8, 10, 0.25),
    });
    const std::vector<double> w = saliency::spatial_weights(t, 0.4);
    for (double v : saliency::color_saliency(t, w)) CHECK(v == 0.0);
    for (double v : saliency::depth_saliency(t, w)) CHECK(v == 0.0);
}

TEST_CASE("depth weight closed forms") {
    SUBCASE("range [0,1] gives mu = 1") {
        const RegionTable t = table_of({
            region({0, 0, 0}, 0.0, 0.1, 0.1, 10, 0.3),
            region({0, 0, 0}, 0.3, 0.5, 0.5, 10, 0.4),
            region({0, 0, 0}, 1.0, 0.9, 0.9, 10, 0.3),
        });
        const saliency::DepthWeights dw = saliency::depth_weights(t);
        CHECK_FALSE(dw.flat_depth);
        CHECK(dw.values[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dw.values[1] == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(dw.values[2] == 0.0);  // farthest region gets exactly zero
    }
    SUBCASE("range [0.2,0.7] gives mu = 2") {
        const RegionTable t = table_of({
            region({0, 0, 0}, 0.2, 0.1, 0.1, 10, 0.5),
            region({0, 0, 0}, 0.7, 0.9, 0.9, 10, 0.5),
        });
        const saliency::DepthWeights dw = saliency::depth_weights(t);
        CHECK(dw.values[0] == doctest::Approx(0.25).epsilon(1e-12));
    }
    SUBCASE("flat depth flags and falls back to 1") {
        const RegionTable t = table_of({
            region({0, 0, 0}, 0.5, 0.1, 0.1, 10, 0.5),
            region({0, 0, 0}, 0.5, 0.9, 0.9, 10, 0.5),
        });
        const saliency::DepthWeights dw = saliency::depth_weights(t);
        CHECK(dw.flat_depth);
        CHECK(dw.values == std::vector<double>{1.0, 1.0});
    }
}

TEST_CASE("center weight prefers central regions and divides by pixel count") {
    SUBCASE("centered region beats a corner region") {
        const RegionTable t = table_of({
            region({0, 0, 0}, 0.5, 0.5, 0.5, 100, 0.5),
            region({0, 0, 0}, 0.5, 0.95, 0.95, 100, 0.5),
        });
        const std::vector<double> wcd = saliency::center_depth_weights(t, {1.0, 1.0});
        CHECK(wcd[0] > wcd[1]);
        CHECK(wcd[1] == 0.0);  // farthest normalizes to 1, inverted to 0
    }
    SUBCASE("identical geometry, pixel counts 2:1 give weights 1:2") {
        const RegionTable t = table_of({
            region({0, 0, 0}, 0.5, 0.4, 0.4, 200, 0.5),
            region({0, 0, 0}, 0.5, 0.4, 0.4, 100, 0.5),
        });
        const std::vector<double> wcd = saliency::center_depth_weights(t, {1.0, 1.0});
        CHECK(wcd[1] == doctest::Approx(2.0 * wcd[0]).epsilon(1e-12));
    }
    SUBCASE("three-region hand evaluation") {
        const RegionTable t = table_of({
            region({0, 0, 0}, 0.2, 0.5, 0.5, 10, 0.2),   // center, near
            region({0, 0, 0}, 0.5, 0.8, 0.5, 20, 0.5),   // right, middle
            region({0, 0, 0}, 0.8, 0.5, 0.95, 15, 0.3),  // bottom, far
        });
        const saliency::DepthWeights dw = saliency::depth_weights(t);
        const std::vector<double> wcd = saliency::center_depth_weights(t, dw.values);
        // distances: 0, 0.3, 0.45 -> normalized {0, 2/3, 1} -> inverted {1, 1/3, 0}
        // mu = 1/0.6; dw = (0.8-d)^mu
        const double mu = 1.0 / 0.6;
        CHECK(wcd[0] == doctest::Approx(1.0 / 10.0 * std::pow(0.6, mu)).epsilon(1e-12));
        CHECK(wcd[1] ==
              doctest::Approx((1.0 - 0.3 / 0.45) / 20.0 * std::pow(0.3, mu)).epsilon(1e-12));
        CHECK(wcd[2] == 0.0);
    }
}

TEST_CASE("initial saliency paints the normalized combination") {
    segmentation::RegionSegmentation seg;
    seg.width = 3;
    seg.height = 1;
    seg.region_count = 3;
    seg.labels = {0, 1, 2};

    saliency::RegionSaliency rs;
    rs.initial = imaging::normalize_values({1.0, 3.0, 5.0});
    const SaliencyMap m = saliency::initial_saliency(seg, rs);
    CHECK(m.values[0] == 0.0);
    CHECK(m.values[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.values[2] == 1.0);
}

TEST_CASE("uniform color and flat depth give an all-zero initial map") {
    const RegionTable t = table_of({
        region({40, 5, 5}, 0.5, 0.3, 0.3, 10, 0.5),
        region({40, 5, 5}, 0.5, 0.7, 0.7, 10, 0.5),
    });
    const saliency::RegionSaliency rs = saliency::compute_region_saliency(t, 0.4);
    CHECK(rs.flat_depth);
    for (double v : rs.initial) CHECK(v == 0.0);
}

TEST_CASE("full region computation matches the brute-force reference") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(rng.next_index(9));  // K <= 10
        const oracle::RegionInput in = oracle::random_region_input(rng, k);
        const oracle::RegionOutput want = oracle::region_reference(in, 0.4);
        const saliency::RegionSaliency got =
            saliency::compute_region_saliency(oracle::to_table(in), 0.4);
        REQUIRE(got.initial.size() == static_cast<size_t>(k));
        CHECK(got.flat_depth == want.flat);
        for (int a = 0; a < k; ++a) {
            CHECK(got.color_contrast[a] == doctest::Approx(want.sc[a]).epsilon(1e-9));
            CHECK(got.depth_contrast[a] == doctest::Approx(want.sd[a]).epsilon(1e-9));
            CHECK(got.depth_weight[a] == doctest::Approx(want.dw[a]).epsilon(1e-9));
            CHECK(got.center_depth_weight[a] == doctest::Approx(want.wcd[a]).epsilon(1e-9));
            CHECK(got.initial[a] == doctest::Approx(want.s1[a]).epsilon(1e-9));
        }
    }
}

TEST_CASE("relabeling regions permutes every output identically") {
    Rng rng(99);
    const oracle::RegionInput in = oracle::random_region_input(rng, 6);
    const RegionTable t = oracle::to_table(in);
    const saliency::RegionSaliency base = saliency::compute_region_saliency(t, 0.4);

    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    RegionTable shuffled = t;
    for (int a = 0; a < 6; ++a) shuffled.regions[a] = t.regions[perm[a]];
    const saliency::RegionSaliency moved = saliency::compute_region_saliency(shuffled, 0.4);
    for (int a = 0; a < 6; ++a) {
        CHECK(moved.color_contrast[a] == doctest::Approx(base.color_contrast[perm[a]]).epsilon(1e-12));
        CHECK(moved.depth_contrast[a] == doctest::Approx(base.depth_contrast[perm[a]]).epsilon(1e-12));
        CHECK(moved.depth_weight[a] == doctest::Approx(base.depth_weight[perm[a]]).epsilon(1e-12));
        CHECK(moved.center_depth_weight[a] ==
              doctest::Approx(base.center_depth_weight[perm[a]]).epsilon(1e-12));
        CHECK(moved.initial[a] == doctest::Approx(base.initial[perm[a]]).epsilon(1e-12));
    }
}

TEST_CASE("contrast scale does not move the argmax of the initial values") {
    Rng rng(31);
    const oracle::RegionInput in = oracle::random_region_input(rng, 8);
    RegionTable t = oracle::to_table(in);
    const saliency::RegionSaliency base = saliency::compute_region_saliency(t, 0.4);

    RegionTable scaled = t;
    for (RegionStats& r : scaled.regions)
        for (int c = 0; c < 3; ++c) r.mean_lab[c] *= 4.0;
    const saliency::RegionSaliency wide = saliency::compute_region_saliency(scaled, 0.4);

    const auto argmax = [](const std::vector<double>& v) {
        return std::max_element(v.begin(), v.end()) - v.begin();
    };
    CHECK(argmax(base.color_contrast) == argmax(wide.color_contrast));
}
