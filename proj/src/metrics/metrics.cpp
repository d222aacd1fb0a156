#include "cdcp/metrics/metrics.hpp"

#include <cmath>

namespace cdcp::metrics {

namespace {

void require_match(const SaliencyMap& s, const GroundTruth& gt, const char* what) {
    if (s.width != gt.width || s.height != gt.height)
        throw Error(std::string(what) + ": map is " + size_string(s.width, s.height) +
                    " but ground truth is " + size_string(gt.width, gt.height));
}

struct Counts {
    int64_t selected = 0;
    int64_t true_positive = 0;
};

Counts count_at(const SaliencyMap& s, const GroundTruth& gt, double t) {
    Counts c;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s.values[i] >= t) {
            ++c.selected;
            c.true_positive += gt.mask[i];
        }
    }
    return c;
}

// Largest threshold index i with v >= i/255, or -1 when even t = 0 misses.
// floor() gets within one step; the correction loops make the result agree
// with the exact floating-point comparison at every grid level.
int top_threshold_index(double v) {
    int i = static_cast<int>(std::floor(v * 255.0));
    if (i > 255) i = 255;
    if (i < -1) i = -1;
    while (i < 255 && v >= threshold_level(i + 1)) ++i;
    while (i >= 0 && v < threshold_level(i)) --i;
    return i;
}

}  // namespace

std::pair<double, double> pr_at_threshold(const SaliencyMap& s, const GroundTruth& gt, double t) {
    require_match(s, gt, "pr_at_threshold");
    if (gt.positive_count == 0) throw Error("pr_at_threshold: ground truth has no positives");
    const Counts c = count_at(s, gt, t);
    const double precision =
        c.selected == 0 ? 1.0
                        : static_cast<double>(c.true_positive) / static_cast<double>(c.selected);
    const double recall =
        static_cast<double>(c.true_positive) / static_cast<double>(gt.positive_count);
    return {precision, recall};
}

double f_measure(double precision, double recall, double beta2) {
    const double denom = beta2 * precision + recall;
    if (denom == 0.0) return 0.0;
    return (1.0 + beta2) * precision * recall / denom;
}

std::pair<double, double> roc_at_threshold(const SaliencyMap& s, const GroundTruth& gt, double t) {
    require_match(s, gt, "roc_at_threshold");
    const int64_t negatives = static_cast<int64_t>(gt.size()) - gt.positive_count;
    if (gt.positive_count == 0 || negatives == 0)
        throw Error("roc_at_threshold: ground truth needs both positives and negatives");
    const Counts c = count_at(s, gt, t);
    const double tpr =
        static_cast<double>(c.true_positive) / static_cast<double>(gt.positive_count);
    const double fpr =
        static_cast<double>(c.selected - c.true_positive) / static_cast<double>(negatives);
    return {fpr, tpr};
}

double mae(const SaliencyMap& s, const GroundTruth& gt) {
    require_match(s, gt, "mae");
    if (s.size() == 0) throw Error("mae: empty map");
    double sum = 0.0;
    for (size_t i = 0; i < s.size(); ++i) sum += std::abs(s.values[i] - gt.mask[i]);
    return sum / static_cast<double>(s.size());
}

EvalReport evaluate(const SaliencyMap& s, const GroundTruth& gt) {
    require_match(s, gt, "evaluate");
    if (gt.positive_count == 0) throw Error("evaluate: ground truth has no positives");
    const int64_t negatives = static_cast<int64_t>(gt.size()) - gt.positive_count;
    if (negatives == 0) throw Error("evaluate: ground truth has no negatives");

    // Bucket pixels by the top threshold index that still selects them, then
    // suffix sums give the per-threshold counts in one pass.
    std::array<int64_t, kThresholdCount> total_hist{};
    std::array<int64_t, kThresholdCount> positive_hist{};
    double mean_value = 0.0;
    double abs_error = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
        const double v = s.values[i];
        mean_value += v;
        abs_error += std::abs(v - gt.mask[i]);
        const int top = top_threshold_index(v);
        if (top >= 0) {
            ++total_hist[top];
            positive_hist[top] += gt.mask[i];
        }
    }
    mean_value /= static_cast<double>(s.size());

    EvalReport report;
    report.mae = abs_error / static_cast<double>(s.size());

    int64_t selected = 0;
    int64_t true_positive = 0;
    for (int i = kThresholdCount - 1; i >= 0; --i) {
        selected += total_hist[i];
        true_positive += positive_hist[i];
        report.selected[i] = static_cast<double>(selected);
        const double precision =
            selected == 0 ? 1.0
                          : static_cast<double>(true_positive) / static_cast<double>(selected);
        const double recall =
            static_cast<double>(true_positive) / static_cast<double>(gt.positive_count);
        report.pr[i] = {precision, recall};
        report.roc[i] = {static_cast<double>(selected - true_positive) /
                             static_cast<double>(negatives),
                         recall};
    }

    report.f_max = 0.0;
    for (const PrPoint& p : report.pr)
        report.f_max = std::max(report.f_max, f_measure(p.precision, p.recall));

    const auto [ap, ar] = pr_at_threshold(s, gt, 2.0 * mean_value);
    report.f_adaptive = f_measure(ap, ar);
    return report;
}

EvalReport aggregate(const std::vector<EvalReport>& reports) {
    if (reports.empty()) throw Error("aggregate: no reports");
    EvalReport out;
    const double n = static_cast<double>(reports.size());
    for (const EvalReport& r : reports) {
        for (int i = 0; i < kThresholdCount; ++i) {
            out.pr[i].precision += r.pr[i].precision / n;
            out.pr[i].recall += r.pr[i].recall / n;
            out.roc[i].fpr += r.roc[i].fpr / n;
            out.roc[i].tpr += r.roc[i].tpr / n;
            out.selected[i] += r.selected[i] / n;
        }
        out.mae += r.mae / n;
        out.f_adaptive += r.f_adaptive / n;
    }
    out.f_max = 0.0;
    for (const PrPoint& p : out.pr) out.f_max = std::max(out.f_max, f_measure(p.precision, p.recall));
    return out;
}

}  // namespace cdcp::metrics
