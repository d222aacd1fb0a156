#include "cdcp/imaging/normalize.hpp"

#include <cmath>

namespace cdcp::imaging {

namespace {

void rescale_in_place(std::vector<double>& v, const char* what) {
    if (v.empty()) return;
    double lo = v[0];
    double hi = v[0];
    for (double x : v) {
        if (!std::isfinite(x))
            throw Error(std::string(what) + ": non-finite value in input");
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    if (hi == lo) {
        for (double& x : v) x = 0.0;
        return;
    }
    // Divide rather than multiply by a reciprocal: (hi-lo)/(hi-lo) is exactly
    // 1.0, so the extremes land on the interval endpoints bit-exactly.
    const double range = hi - lo;
    for (double& x : v) x = (x - lo) / range;
}

}  // namespace

ScalarMap normalize_map(const ScalarMap& map) {
    ScalarMap out = map;
    rescale_in_place(out.values, "normalize_map");
    return out;
}

std::vector<double> normalize_values(const std::vector<double>& values) {
    std::vector<double> out = values;
    rescale_in_place(out, "normalize_values");
    return out;
}

}  // namespace cdcp::imaging
