#pragma once

#include "cdcp/core/types.hpp"

namespace cdcp::imaging {

// Min-max rescale to [0,1]. A constant map (max == min) comes back all zeros;
// NaN or infinity in the input is an error.
ScalarMap normalize_map(const ScalarMap& map);

// Same rescale for a bare value vector (per-region quantities).
std::vector<double> normalize_values(const std::vector<double>& values);

}  // namespace cdcp::imaging
