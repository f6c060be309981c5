#include "tfilter/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace tfilter {

void SsimSpec::validate() const {
    if (window < 2) throw InvalidArgument("ssim window must be >= 2");
    if (!(k1 > 0.0) || !(k2 > 0.0)) throw InvalidArgument("ssim k1 and k2 must be positive");
    if (!(dynamic_range > 0.0)) throw InvalidArgument("ssim dynamic range must be positive");
    if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0))
        throw InvalidArgument("ssim exponents must be positive");
}

double mse(const LumaPlane& ref, const LumaPlane& cand) {
    require_same_geometry(ref, cand, "mse");
    const auto a = ref.samples();
    const auto b = cand.samples();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(a.size());
}

double psnr(double mse_value) {
    if (!(mse_value >= 0.0)) throw InvalidArgument("mse must be non-negative");
    if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

namespace {

// Summed-area table with one row and column of zero padding.
class IntegralImage {
public:
    template <typename Fn>
    IntegralImage(int w, int h, Fn&& value) : stride_(static_cast<std::size_t>(w) + 1) {
        sums_.assign(stride_ * (static_cast<std::size_t>(h) + 1), 0);
        for (int y = 0; y < h; ++y) {
            std::int64_t row = 0;
            for (int x = 0; x < w; ++x) {
                row += value(x, y);
                sums_[idx(x + 1, y + 1)] = sums_[idx(x + 1, y)] + row;
            }
        }
    }

    std::int64_t box(int x, int y, int size) const {
        return sums_[idx(x + size, y + size)] - sums_[idx(x, y + size)] -
               sums_[idx(x + size, y)] + sums_[idx(x, y)];
    }

private:
    std::size_t idx(int x, int y) const { return static_cast<std::size_t>(y) * stride_ + x; }
    std::size_t stride_;
    std::vector<std::int64_t> sums_;
};

double signed_pow(double v, double e) {
    if (e == 1.0) return v;
    return v < 0.0 ? -std::pow(-v, e) : std::pow(v, e);
}

}  // namespace

double ssim(const LumaPlane& ref, const LumaPlane& cand, const SsimSpec& spec) {
    spec.validate();
    require_same_geometry(ref, cand, "ssim");
    const int n = spec.window;
    if (ref.width() < n || ref.height() < n)
        throw GeometryError("ssim: plane " + geometry_string(ref) + " is smaller than the " +
                            std::to_string(n) + "x" + std::to_string(n) + " window");

    const int w = ref.width();
    const int h = ref.height();
    const IntegralImage sx(w, h, [&](int x, int y) { return std::int64_t{ref.at(x, y)}; });
    const IntegralImage sy(w, h, [&](int x, int y) { return std::int64_t{cand.at(x, y)}; });
    const IntegralImage sxx(w, h, [&](int x, int y) { return std::int64_t{ref.at(x, y)} * ref.at(x, y); });
    const IntegralImage syy(w, h, [&](int x, int y) { return std::int64_t{cand.at(x, y)} * cand.at(x, y); });
    const IntegralImage sxy(w, h, [&](int x, int y) { return std::int64_t{ref.at(x, y)} * cand.at(x, y); });

    const double c1 = spec.c1();
    const double c2 = spec.c2();
    const double c3 = spec.effective_c3();
    // With unit exponents and C3 = C2/2, c*s reduces to (2 cov + C2) / (vx + vy + C2).
    const bool simplified =
        spec.alpha == 1.0 && spec.beta == 1.0 && spec.gamma == 1.0 && c3 == c2 / 2.0;

    const std::int64_t count = std::int64_t{n} * n;
    const double norm = static_cast<double>(count) * static_cast<double>(count - 1);
    double total = 0.0;
    for (int y = 0; y + n <= h; ++y)
        for (int x = 0; x + n <= w; ++x) {
            const std::int64_t ax = sx.box(x, y, n);
            const std::int64_t ay = sy.box(x, y, n);
            const double mx = static_cast<double>(ax) / static_cast<double>(count);
            const double my = static_cast<double>(ay) / static_cast<double>(count);
            // Exact integer numerators keep identical windows bit-identical.
            const double vx = static_cast<double>(count * sxx.box(x, y, n) - ax * ax) / norm;
            const double vy = static_cast<double>(count * syy.box(x, y, n) - ay * ay) / norm;
            const double cov = static_cast<double>(count * sxy.box(x, y, n) - ax * ay) / norm;

            const double l = (2.0 * mx * my + c1) / (mx * mx + my * my + c1);
            double score;
            if (simplified) {
                score = l * (2.0 * cov + c2) / (vx + vy + c2);
            } else {
                const double dx = std::sqrt(vx);
                const double dy = std::sqrt(vy);
                const double c = (2.0 * dx * dy + c2) / (vx + vy + c2);
                const double s = (cov + c3) / (dx * dy + c3);
                score = signed_pow(l, spec.alpha) * signed_pow(c, spec.beta) *
                        signed_pow(s, spec.gamma);
            }
            total += score;
        }
    const double windows = static_cast<double>(w - n + 1) * static_cast<double>(h - n + 1);
    return total / windows;
}

QualityReport evaluate(const LumaPlane& ref, const LumaPlane& cand, const SsimSpec& spec) {
    require_same_geometry(ref, cand, "evaluate");
    QualityReport r;
    r.mse = mse(ref, cand);
    r.psnr = psnr(r.mse);
    r.ssim = ssim(ref, cand, spec);
    return r;
}

}  // namespace tfilter
