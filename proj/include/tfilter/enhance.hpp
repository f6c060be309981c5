#pragma once

#include <array>

#include "tfilter/degrade.hpp"
#include "tfilter/plane.hpp"

namespace tfilter {

/// Sharpening kernel (-alpha, 1 + 2 alpha, -alpha).
struct PeakingSpec {
    double alpha = 0.2;

    void validate() const;
    std::array<double, 3> taps() const { return {-alpha, 1.0 + 2.0 * alpha, -alpha}; }
};

/// Low-quality coding-artifact reducer: the same Gaussian as gaussian_blur.
LumaPlane smooth_artifacts(const LumaPlane& plane, const GaussianSpec& spec = {});

/// Horizontal then vertical 3-tap peaking with a single final rounding.
LumaPlane peaking_filter(const LumaPlane& plane, const PeakingSpec& spec = {});

/// Bilinear 2x up-scaler. For low-res cell (i, j) the neighbours
/// D0 = (i, j), D1 = (i, j+1), D2 = (i+1, j), D3 = (i+1, j+1) (row, column,
/// replicated at the right and bottom edge) produce the 2x2 output block
/// at (2i, 2j):
///
///   B0 = (.75 D0 + .25 D1) .75 + (.75 D2 + .25 D3) .25    top-left
///   B1 = (.25 D0 + .75 D1) .75 + (.25 D2 + .75 D3) .25    top-right
///   B2 = (.75 D0 + .25 D1) .25 + (.75 D2 + .25 D3) .75    bottom-left
///   B3 = (.25 D0 + .75 D1) .25 + (.25 D2 + .75 D3) .75    bottom-right
LumaPlane bilinear_upscale_2x(const LumaPlane& plane);

/// The four block values for one neighbourhood, before rounding.
std::array<double, 4> bilinear_block(double d0, double d1, double d2, double d3);

}  // namespace tfilter
