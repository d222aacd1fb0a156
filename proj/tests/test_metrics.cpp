#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "cdcp/core/rng.hpp"
#include "cdcp/metrics/metrics.hpp"
#include "oracle_helpers.hpp"

using namespace cdcp;

namespace {

GroundTruth gt_of(int w, int h, const std::vector<int>& bits) {
    GroundTruth gt;
    gt.width = w;
    gt.height = h;
    gt.mask.assign(bits.begin(), bits.end());
    for (int b : bits) gt.positive_count += b;
    return gt;
}

SaliencyMap map_of(int w, int h, std::vector<double> v) {
    SaliencyMap m(w, h);
    m.values = std::move(v);
    return m;
}

struct RandomPair {
    SaliencyMap s;
    GroundTruth gt;
};

RandomPair random_pair(Rng& rng, int w, int h) {
    RandomPair p;
    p.s = SaliencyMap(w, h);
    std::vector<int> bits(static_cast<size_t>(w) * h);
    while (true) {
        int64_t pos = 0;
        for (size_t i = 0; i < bits.size(); ++i) {
            // Quantized saliency mixed with exact grid values exercises the
            // s >= t boundary cases the sweep has to get right.
            const double v = rng.next_double();
            p.s.values[i] = rng.next_index(4) == 0
                                ? std::floor(v * 255.0) / 255.0
                                : v;
            bits[i] = rng.next_double() < 0.3 ? 1 : 0;
            pos += bits[i];
        }
        if (pos > 0 && pos < static_cast<int64_t>(bits.size())) break;  // needs both classes
    }
    p.gt = gt_of(w, h, bits);
    return p;
}

std::vector<int> gt_bits(const GroundTruth& gt) {
    return std::vector<int>(gt.mask.begin(), gt.mask.end());
}

}  // namespace

TEST_CASE("a perfect binary map scores perfectly at mid threshold") {
    const GroundTruth gt = gt_of(2, 2, {1, 0, 0, 1});
    const SaliencyMap s = map_of(2, 2, {1.0, 0.0, 0.0, 1.0});
    const auto [p, r] = metrics::pr_at_threshold(s, gt, 0.5);
    CHECK(p == 1.0);
    CHECK(r == 1.0);
    CHECK(metrics::mae(s, gt) == 0.0);
}

TEST_CASE("threshold zero selects everything") {
    const GroundTruth gt = gt_of(2, 2, {1, 0, 0, 0});
    const SaliencyMap s = map_of(2, 2, {0.9, 0.3, 0.2, 0.1});
    const auto [p, r] = metrics::pr_at_threshold(s, gt, 0.0);
    CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r == 1.0);
    const auto [fpr, tpr] = metrics::roc_at_threshold(s, gt, 0.0);
    CHECK(fpr == 1.0);
    CHECK(tpr == 1.0);
}

TEST_CASE("a threshold above the maximum selects nothing") {
    const GroundTruth gt = gt_of(2, 2, {1, 1, 0, 0});
    const SaliencyMap s = map_of(2, 2, {0.5, 0.4, 0.3, 0.2});
    const auto [p, r] = metrics::pr_at_threshold(s, gt, 0.9);
    CHECK(p == 1.0);  // empty-set convention
    CHECK(r == 0.0);
    const auto [fpr, tpr] = metrics::roc_at_threshold(s, gt, 0.9);
    CHECK(fpr == 0.0);
    CHECK(tpr == 0.0);
}

TEST_CASE("f-measure identities") {
    CHECK(metrics::f_measure(0.8, 0.6) == doctest::Approx(0.7428571428571429).epsilon(1e-12));
    CHECK(metrics::f_measure(0.0, 0.0) == 0.0);
    CHECK(metrics::f_measure(1.0, 0.0) == 0.0);
    CHECK(metrics::f_measure(0.0, 1.0) == 0.0);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        const double p = rng.next_double();
        CHECK(metrics::f_measure(p, p) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("mae closed forms") {
    const GroundTruth gt = gt_of(2, 2, {1, 1, 0, 0});
    CHECK(metrics::mae(map_of(2, 2, {1, 1, 0, 0}), gt) == 0.0);
    CHECK(metrics::mae(map_of(2, 2, {0, 0, 1, 1}), gt) == 1.0);
    CHECK(metrics::mae(map_of(2, 2, {0.5, 0.5, 0.5, 0.5}), gt) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("degenerate ground truth is rejected") {
    const SaliencyMap s = map_of(2, 1, {0.5, 0.5});
    CHECK_THROWS_AS(metrics::pr_at_threshold(s, gt_of(2, 1, {0, 0}), 0.5), Error);
    CHECK_THROWS_AS(metrics::roc_at_threshold(s, gt_of(2, 1, {0, 0}), 0.5), Error);
    CHECK_THROWS_AS(metrics::roc_at_threshold(s, gt_of(2, 1, {1, 1}), 0.5), Error);
    CHECK_THROWS_AS(metrics::evaluate(s, gt_of(2, 1, {0, 0})), Error);
    CHECK_THROWS_AS(metrics::evaluate(s, gt_of(2, 1, {1, 1})), Error);
    CHECK_THROWS_AS(metrics::mae(s, gt_of(3, 1, {1, 0, 0})), Error);
}

TEST_CASE("sweep equals per-threshold counting on random maps") {
    Rng rng(911);
    for (int trial = 0; trial < 100; ++trial) {
        const RandomPair pair = random_pair(rng, 32, 32);
        const metrics::EvalReport rep = metrics::evaluate(pair.s, pair.gt);
        const std::vector<int> bits = gt_bits(pair.gt);

        double best_f = 0.0;
        for (int i = 0; i < metrics::kThresholdCount; ++i) {
            const double t = metrics::threshold_level(i);
            const oracle::MetricCounts c = oracle::count_sets(pair.s.values, bits, t);
            const double p = oracle::precision_of(c);
            const double r = oracle::recall_of(c);
            CHECK(rep.pr[i].precision == doctest::Approx(p).epsilon(1e-9));
            CHECK(rep.pr[i].recall == doctest::Approx(r).epsilon(1e-9));
            CHECK(rep.roc[i].fpr == doctest::Approx(oracle::fpr_of(c)).epsilon(1e-9));
            CHECK(rep.roc[i].tpr == doctest::Approx(r).epsilon(1e-9));
            CHECK(rep.selected[i] == static_cast<double>(c.selected));
            best_f = std::max(best_f, oracle::f_of(p, r, metrics::kBeta2));
        }
        CHECK(rep.f_max == doctest::Approx(best_f).epsilon(1e-9));
        CHECK(rep.mae == doctest::Approx(oracle::mae_of(pair.s.values, bits)).epsilon(1e-9));

        double mean = 0.0;
        for (double v : pair.s.values) mean += v;
        mean /= static_cast<double>(pair.s.size());
        const oracle::MetricCounts c = oracle::count_sets(pair.s.values, bits, 2.0 * mean);
        CHECK(rep.f_adaptive ==
              doctest::Approx(oracle::f_of(oracle::precision_of(c), oracle::recall_of(c),
                                           metrics::kBeta2))
                  .epsilon(1e-9));
    }
}

TEST_CASE("recall and false positive rate never rise with the threshold") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const RandomPair pair = random_pair(rng, 24, 24);
        const metrics::EvalReport rep = metrics::evaluate(pair.s, pair.gt);
        for (int i = 1; i < metrics::kThresholdCount; ++i) {
            CHECK(rep.pr[i].recall <= rep.pr[i - 1].recall);
            CHECK(rep.roc[i].fpr <= rep.roc[i - 1].fpr);
            CHECK(rep.selected[i] <= rep.selected[i - 1]);
        }
        // Endpoints: t = 0 selects every pixel.
        CHECK(rep.pr[0].recall == 1.0);
        CHECK(rep.roc[0].fpr == 1.0);
    }
}

TEST_CASE("exact grid values flip exactly at their own threshold") {
    // Value 128/255 must be selected at t = 128/255 but not at t = 129/255.
    const GroundTruth gt = gt_of(2, 1, {1, 0});
    const SaliencyMap s = map_of(2, 1, {128.0 / 255.0, 0.0});
    const metrics::EvalReport rep = metrics::evaluate(s, gt);
    CHECK(rep.pr[128].recall == 1.0);
    CHECK(rep.pr[129].recall == 0.0);
    CHECK(rep.selected[128] == 1.0);
    CHECK(rep.selected[129] == 0.0);
    // And value 1.0 stays selected through the last threshold.
    const SaliencyMap top = map_of(2, 1, {1.0, 0.0});
    const metrics::EvalReport rep2 = metrics::evaluate(top, gt);
    CHECK(rep2.pr[255].recall == 1.0);
}

TEST_CASE("aggregating one report reproduces it") {
    Rng rng(55);
    const RandomPair pair = random_pair(rng, 16, 16);
    const metrics::EvalReport rep = metrics::evaluate(pair.s, pair.gt);
    const metrics::EvalReport agg = metrics::aggregate({rep});
    for (int i = 0; i < metrics::kThresholdCount; ++i) {
        CHECK(agg.pr[i].precision == doctest::Approx(rep.pr[i].precision).epsilon(1e-12));
        CHECK(agg.pr[i].recall == doctest::Approx(rep.pr[i].recall).epsilon(1e-12));
        CHECK(agg.roc[i].fpr == doctest::Approx(rep.roc[i].fpr).epsilon(1e-12));
    }
    CHECK(agg.mae == doctest::Approx(rep.mae).epsilon(1e-12));
    CHECK(agg.f_adaptive == doctest::Approx(rep.f_adaptive).epsilon(1e-12));
    CHECK(agg.f_max == doctest::Approx(rep.f_max).epsilon(1e-12));
}

TEST_CASE("aggregation averages curves and scalars") {
    Rng rng(56);
    const RandomPair a = random_pair(rng, 16, 16);
    const RandomPair b = random_pair(rng, 16, 16);
    const metrics::EvalReport ra = metrics::evaluate(a.s, a.gt);
    const metrics::EvalReport rb = metrics::evaluate(b.s, b.gt);
    const metrics::EvalReport agg = metrics::aggregate({ra, rb});

    double expect_fmax = 0.0;
    for (int i = 0; i < metrics::kThresholdCount; ++i) {
        const double p = (ra.pr[i].precision + rb.pr[i].precision) / 2.0;
        const double r = (ra.pr[i].recall + rb.pr[i].recall) / 2.0;
        CHECK(agg.pr[i].precision == doctest::Approx(p).epsilon(1e-12));
        CHECK(agg.pr[i].recall == doctest::Approx(r).epsilon(1e-12));
        CHECK(agg.roc[i].fpr ==
              doctest::Approx((ra.roc[i].fpr + rb.roc[i].fpr) / 2.0).epsilon(1e-12));
        CHECK(agg.selected[i] ==
              doctest::Approx((ra.selected[i] + rb.selected[i]) / 2.0).epsilon(1e-12));
        expect_fmax = std::max(expect_fmax, metrics::f_measure(p, r));
    }
    CHECK(agg.mae == doctest::Approx((ra.mae + rb.mae) / 2.0).epsilon(1e-12));
    CHECK(agg.f_adaptive == doctest::Approx((ra.f_adaptive + rb.f_adaptive) / 2.0).epsilon(1e-12));
    CHECK(agg.f_max == doctest::Approx(expect_fmax).epsilon(1e-12));
    CHECK_THROWS_AS(metrics::aggregate({}), Error);
}
