#pragma once

#include "cdcp/core/types.hpp"

namespace cdcp::imaging {

// sRGB (D65) to CIE Lab. Inputs in [0,1], outputs L in [0,100] and a,b in
// roughly [-128, 128]. Gray inputs land on the L axis (a == b == 0 up to
// floating-point noise in the white point).
Color3 rgb_to_lab(const Color3& rgb);

LabImage rgb_to_lab(const RgbImage& image);

}  // namespace cdcp::imaging
