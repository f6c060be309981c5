#include "tfilter/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace tfilter {

namespace {

// std distributions are implementation-defined; draw from the raw engine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 engine_;
};

enum class Fill { flat, gradient, stripes, checker };

struct Paint {
    Fill fill;
    double base, amp, fx, fy, phase;
    int cell;

    double at(double x, double y) const {
        switch (fill) {
            case Fill::flat: return base;
            case Fill::gradient: return base + amp * (fx * x + fy * y);
            case Fill::stripes: return base + amp * std::sin(fx * x + fy * y + phase);
            case Fill::checker: {
                const int cx = static_cast<int>(std::floor(x / cell));
                const int cy = static_cast<int>(std::floor(y / cell));
                return base + ((cx + cy) % 2 == 0 ? amp : -amp);
            }
        }
        return base;
    }
};

Paint random_paint(Rng& rng) {
    Paint p{};
    p.fill = static_cast<Fill>(rng.integer(0, 3));
    p.base = rng.uniform(20.0, 235.0);
    p.amp = rng.uniform(10.0, 60.0);
    const double period = rng.uniform(2.5, 14.0);
    const double angle = rng.uniform(0.0, std::numbers::pi);
    p.fx = 2.0 * std::numbers::pi / period * std::cos(angle);
    p.fy = 2.0 * std::numbers::pi / period * std::sin(angle);
    p.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    p.cell = rng.integer(2, 8);
    if (p.fill == Fill::gradient) {
        p.fx = std::cos(angle) / 64.0;
        p.fy = std::sin(angle) / 64.0;
    }
    return p;
}

}  // namespace

LumaPlane synth_image(std::uint64_t seed, int width, int height) {
    Rng rng(seed * 0x9E3779B97F4A7C15ull + 1);
    const int w = width;
    const int h = height;
    std::vector<double> img(static_cast<std::size_t>(w) * h);
    auto px = [&](int x, int y) -> double& { return img[static_cast<std::size_t>(y) * w + x]; };

    // Smooth background.
    const double a = rng.uniform(70.0, 170.0);
    const double gx = rng.uniform(-60.0, 60.0);
    const double gy = rng.uniform(-60.0, 60.0);
    const double wave = rng.uniform(10.0, 30.0);
    const double wfx = rng.uniform(0.005, 0.03);
    const double wfy = rng.uniform(0.005, 0.03);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            px(x, y) = a + gx * x / w + gy * y / h + wave * std::sin(wfx * x + wfy * y);

    // Shapes: rectangles and ellipses with assorted fills.
    const int shapes = std::max(8, w * h / 6000);
    for (int s = 0; s < shapes; ++s) {
        const Paint paint = random_paint(rng);
        const double cx = rng.uniform(0.0, w);
        const double cy = rng.uniform(0.0, h);
        const double rx = rng.uniform(4.0, std::max(6.0, w / 6.0));
        const double ry = rng.uniform(4.0, std::max(6.0, h / 6.0));
        const bool ellipse = rng.uniform() < 0.5;
        const int x0 = std::max(0, static_cast<int>(cx - rx));
        const int x1 = std::min(w - 1, static_cast<int>(cx + rx));
        const int y0 = std::max(0, static_cast<int>(cy - ry));
        const int y1 = std::min(h - 1, static_cast<int>(cy + ry));
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x) {
                if (ellipse) {
                    const double dx = (x - cx) / rx;
                    const double dy = (y - cy) / ry;
                    if (dx * dx + dy * dy > 1.0) continue;
                }
                px(x, y) = paint.at(x, y);
            }
    }

    // Thin lines.
    const int lines = std::max(6, w * h / 15000);
    for (int l = 0; l < lines; ++l) {
        const double value = rng.uniform() < 0.5 ? rng.uniform(0.0, 60.0) : rng.uniform(195.0, 255.0);
        double x = rng.uniform(0.0, w);
        double y = rng.uniform(0.0, h);
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const int length = rng.integer(20, std::max(21, w / 2));
        const int thickness = rng.integer(1, 2);
        for (int t = 0; t < length; ++t, x += std::cos(angle), y += std::sin(angle))
            for (int k = 0; k < thickness; ++k) {
                const int ix = static_cast<int>(x) + k;
                const int iy = static_cast<int>(y);
                if (ix >= 0 && ix < w && iy >= 0 && iy < h) px(ix, iy) = value;
            }
    }

    // Mild optical softening, then sensor noise.
    const double taps[3] = {1.0 / 8.0, 6.0 / 8.0, 1.0 / 8.0};
    std::vector<double> tmp(img.size());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int k = -1; k <= 1; ++k) s += taps[k + 1] * px(std::clamp(x + k, 0, w - 1), y);
            tmp[static_cast<std::size_t>(y) * w + x] = s;
        }
    LumaPlane out(w, h);
    const double noise = rng.uniform(1.0, 2.5);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double s = 0.0;
            for (int k = -1; k <= 1; ++k)
                s += taps[k + 1] * tmp[static_cast<std::size_t>(std::clamp(y + k, 0, h - 1)) * w + x];
            out.at(x, y) = to_sample(s + noise * rng.normal());
        }
    return out;
}

}  // namespace tfilter
