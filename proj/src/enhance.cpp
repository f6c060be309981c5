#include "tfilter/enhance.hpp"

#include <cmath>

namespace tfilter {

void PeakingSpec::validate() const {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw InvalidArgument("peaking alpha must be a finite value >= 0");
}

LumaPlane smooth_artifacts(const LumaPlane& plane, const GaussianSpec& spec) {
    return gaussian_blur(plane, spec);
}

LumaPlane peaking_filter(const LumaPlane& plane, const PeakingSpec& spec) {
    spec.validate();
    const auto t = spec.taps();
    return convolve_separable(plane, {t.begin(), t.end()});
}

std::array<double, 4> bilinear_block(double d0, double d1, double d2, double d3) {
    return {
        (0.75 * d0 + 0.25 * d1) * 0.75 + (0.75 * d2 + 0.25 * d3) * 0.25,
        (0.25 * d0 + 0.75 * d1) * 0.75 + (0.25 * d2 + 0.75 * d3) * 0.25,
        (0.75 * d0 + 0.25 * d1) * 0.25 + (0.75 * d2 + 0.25 * d3) * 0.75,
        (0.25 * d0 + 0.75 * d1) * 0.25 + (0.25 * d2 + 0.75 * d3) * 0.75,
    };
}

LumaPlane bilinear_upscale_2x(const LumaPlane& plane) {
    LumaPlane out(plane.width() * 2, plane.height() * 2);
    for (int i = 0; i < plane.height(); ++i)
        for (int j = 0; j < plane.width(); ++j) {
            const auto b = bilinear_block(plane.clamped(j, i), plane.clamped(j + 1, i),
                                          plane.clamped(j, i + 1), plane.clamped(j + 1, i + 1));
            out.at(2 * j, 2 * i) = to_sample(b[0]);
            out.at(2 * j + 1, 2 * i) = to_sample(b[1]);
            out.at(2 * j, 2 * i + 1) = to_sample(b[2]);
            out.at(2 * j + 1, 2 * i + 1) = to_sample(b[3]);
        }
    return out;
}

}  // namespace tfilter
