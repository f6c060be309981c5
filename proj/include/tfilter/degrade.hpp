#pragma once

#include <array>
#include <vector>

#include "tfilter/plane.hpp"

namespace tfilter {

/// Block-transform compression simulator settings.
struct CompressionSpec {
    int quality = 20;
    static constexpr int kBlockSize = 8;

    void validate() const;
};

struct GaussianSpec {
    int radius = 2;
    double sigma = 1.0;

    void validate() const;
};

/// Standard JPEG luminance quantization table (row-major, natural order).
extern const std::array<int, 64> kJpegLumaTable;

/// Luminance table scaled for `quality` with the usual 5000/Q, 200-2Q rule.
std::array<int, 64> scaled_quant_table(int quality);

/// Simulates block-transform coding artifacts: per 8x8 block DCT, quantize,
/// dequantize, inverse DCT. No bitstream is produced. The plane is padded to a
/// multiple of 8 by edge replication and cropped back afterwards.
LumaPlane compress_blocky(const LumaPlane& plane, const CompressionSpec& spec = {});

/// Normalized taps exp(-k^2 / 2 sigma^2) for k in [-radius, radius].
std::vector<double> gaussian_kernel(const GaussianSpec& spec);

/// Separable Gaussian (horizontal then vertical) with edge replication.
/// The intermediate stays real-valued; rounding happens once at the end.
LumaPlane gaussian_blur(const LumaPlane& plane, const GaussianSpec& spec = {});

/// Each output sample is the rounded mean of a non-overlapping 2x2 block.
LumaPlane downsample_2x(const LumaPlane& plane);

/// Separable convolution with edge replication and one final rounding.
/// Shared by the blur and peaking filters.
LumaPlane convolve_separable(const LumaPlane& plane, const std::vector<double>& taps);

/// Real-valued version of convolve_separable, before rounding.
std::vector<double> convolve_separable_real(const LumaPlane& plane,
                                            const std::vector<double>& taps);

}  // namespace tfilter
