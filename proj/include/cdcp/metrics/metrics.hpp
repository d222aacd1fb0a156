#pragma once

#include <array>

#include "cdcp/core/types.hpp"

namespace cdcp::metrics {

constexpr int kThresholdCount = 256;  // t = i/255, matching 8-bit map export
constexpr double kBeta2 = 0.3;

inline double threshold_level(int i) { return static_cast<double>(i) / 255.0; }

struct PrPoint {
    double precision = 0.0;
    double recall = 0.0;
};

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct EvalReport {
    std::array<PrPoint, kThresholdCount> pr{};
    std::array<RocPoint, kThresholdCount> roc{};
    // Pixels selected at each threshold (mean across images after aggregation);
    // 0 marks thresholds where the empty-set precision convention kicked in.
    std::array<double, kThresholdCount> selected{};
    double f_max = 0.0;
    double f_adaptive = 0.0;
    double mae = 0.0;
};

// Binarization is s >= t everywhere. Precision of an empty binarized set is
// defined as 1 so the curve stays usable at high thresholds.
std::pair<double, double> pr_at_threshold(const SaliencyMap& s, const GroundTruth& gt, double t);

// F_beta = (1 + beta2) P R / (beta2 P + R), 0 when the denominator vanishes.
double f_measure(double precision, double recall, double beta2 = kBeta2);

std::pair<double, double> roc_at_threshold(const SaliencyMap& s, const GroundTruth& gt, double t);

double mae(const SaliencyMap& s, const GroundTruth& gt);

// Full 256-threshold sweep plus MAE, max-F, and adaptive F at t = 2*mean(s).
// Single pass over the pixels; matches per-threshold counting exactly.
EvalReport evaluate(const SaliencyMap& s, const GroundTruth& gt);

// Dataset-level report: per-threshold means of the curves, mean MAE, mean
// adaptive F, and max-F recomputed from the mean PR curve.
EvalReport aggregate(const std::vector<EvalReport>& reports);

}  // namespace cdcp::metrics
