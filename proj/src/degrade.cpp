#include "tfilter/degrade.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tfilter {

const std::array<int, 64> kJpegLumaTable = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

void CompressionSpec::validate() const {
    if (quality < 1 || quality > 100)
        throw InvalidArgument("compression quality must be in [1, 100], got " +
                              std::to_string(quality));
}

void GaussianSpec::validate() const {
    if (radius < 1) throw InvalidArgument("gaussian radius must be >= 1");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw InvalidArgument("gaussian sigma must be positive");
}

std::array<int, 64> scaled_quant_table(int quality) {
    CompressionSpec{quality}.validate();
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    std::array<int, 64> out{};
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int q = (kJpegLumaTable[i] * scale + 50) / 100;
        out[i] = std::clamp(q, 1, 255);
    }
    return out;
}

namespace {

constexpr int kN = CompressionSpec::kBlockSize;

// basis[u][x] = c(u) cos((2x+1) u pi / 16), orthonormal DCT-II
std::array<std::array<double, kN>, kN> make_dct_basis() {
    std::array<std::array<double, kN>, kN> b{};
    for (int u = 0; u < kN; ++u) {
        const double cu = u == 0 ? std::sqrt(1.0 / kN) : std::sqrt(2.0 / kN);
        for (int x = 0; x < kN; ++x)
            b[u][x] = cu * std::cos((2 * x + 1) * u * std::numbers::pi / (2.0 * kN));
    }
    return b;
}

using Block = std::array<std::array<double, kN>, kN>;

void forward_dct(const Block& in, Block& out, const Block& basis) {
    Block tmp{};
    for (int y = 0; y < kN; ++y)
        for (int u = 0; u < kN; ++u) {
            double s = 0.0;
            for (int x = 0; x < kN; ++x) s += basis[u][x] * in[y][x];
            tmp[y][u] = s;
        }
    for (int v = 0; v < kN; ++v)
        for (int u = 0; u < kN; ++u) {
            double s = 0.0;
            for (int y = 0; y < kN; ++y) s += basis[v][y] * tmp[y][u];
            out[v][u] = s;
        }
}

void inverse_dct(const Block& in, Block& out, const Block& basis) {
    Block tmp{};
    for (int v = 0; v < kN; ++v)
        for (int x = 0; x < kN; ++x) {
            double s = 0.0;
            for (int u = 0; u < kN; ++u) s += basis[u][x] * in[v][u];
            tmp[v][x] = s;
        }
    for (int y = 0; y < kN; ++y)
        for (int x = 0; x < kN; ++x) {
            double s = 0.0;
            for (int v = 0; v < kN; ++v) s += basis[v][y] * tmp[v][x];
            out[y][x] = s;
        }
}

}  // namespace

LumaPlane compress_blocky(const LumaPlane& plane, const CompressionSpec& spec) {
    spec.validate();
    static const Block basis = make_dct_basis();
    const auto table = scaled_quant_table(spec.quality);

    LumaPlane out(plane.width(), plane.height());
    Block pix{}, coef{}, rec{};
    for (int by = 0; by < plane.height(); by += kN) {
        for (int bx = 0; bx < plane.width(); bx += kN) {
            for (int y = 0; y < kN; ++y)
                for (int x = 0; x < kN; ++x)
                    pix[y][x] = static_cast<double>(plane.clamped(bx + x, by + y)) - 128.0;
            forward_dct(pix, coef, basis);
            for (int v = 0; v < kN; ++v)
                for (int u = 0; u < kN; ++u) {
                    const double q = table[static_cast<std::size_t>(v * kN + u)];
                    coef[v][u] = std::round(coef[v][u] / q) * q;
                }
            inverse_dct(coef, rec, basis);
            for (int y = 0; y < kN && by + y < plane.height(); ++y)
                for (int x = 0; x < kN && bx + x < plane.width(); ++x)
                    out.at(bx + x, by + y) = to_sample(rec[y][x] + 128.0);
        }
    }
    return out;
}

std::vector<double> gaussian_kernel(const GaussianSpec& spec) {
    spec.validate();
    std::vector<double> taps(static_cast<std::size_t>(2 * spec.radius + 1));
    double sum = 0.0;
    for (int k = -spec.radius; k <= spec.radius; ++k) {
        const double t = std::exp(-(k * k) / (2.0 * spec.sigma * spec.sigma));
        taps[static_cast<std::size_t>(k + spec.radius)] = t;
        sum += t;
    }
    for (auto& t : taps) t /= sum;
    return taps;
}

std::vector<double> convolve_separable_real(const LumaPlane& plane,
                                            const std::vector<double>& taps) {
    if (taps.empty() || taps.size() % 2 == 0)
        throw InvalidArgument("separable kernel needs an odd number of taps");
    const int r = static_cast<int>(taps.size() / 2);
    const int w = plane.width();
    const int h = plane.height();
    const auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };

    std::vector<double> horiz(plane.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int k = -r; k <= r; ++k)
                s += taps[static_cast<std::size_t>(k + r)] * plane.clamped(x + k, y);
            horiz[idx(x, y)] = s;
        }

    std::vector<double> out(plane.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int k = -r; k <= r; ++k)
                s += taps[static_cast<std::size_t>(k + r)] *
                     horiz[idx(x, std::clamp(y + k, 0, h - 1))];
            out[idx(x, y)] = s;
        }
    return out;
}

LumaPlane convolve_separable(const LumaPlane& plane, const std::vector<double>& taps) {
    const auto real = convolve_separable_real(plane, taps);
    LumaPlane out(plane.width(), plane.height());
    auto dst = out.samples();
    for (std::size_t i = 0; i < real.size(); ++i) dst[i] = to_sample(real[i]);
    return out;
}

LumaPlane gaussian_blur(const LumaPlane& plane, const GaussianSpec& spec) {
    return convolve_separable(plane, gaussian_kernel(spec));
}

LumaPlane downsample_2x(const LumaPlane& plane) {
    if (plane.width() % 2 != 0 || plane.height() % 2 != 0)
        throw GeometryError("downsampling needs even dimensions, got " + geometry_string(plane));
    LumaPlane out(plane.width() / 2, plane.height() / 2);
    for (int y = 0; y < out.height(); ++y)
        for (int x = 0; x < out.width(); ++x) {
            const int sum = plane.at(2 * x, 2 * y) + plane.at(2 * x + 1, 2 * y) +
                            plane.at(2 * x, 2 * y + 1) + plane.at(2 * x + 1, 2 * y + 1);
            // sum/4 has a fractional part of 0, .25, .5 or .75; ties go up.
            out.at(x, y) = static_cast<std::uint8_t>((sum + 2) / 4);
        }
    return out;
}

}  // namespace tfilter
