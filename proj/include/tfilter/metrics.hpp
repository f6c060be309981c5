#pragma once

#include "tfilter/plane.hpp"

namespace tfilter {

/// Sliding-window SSIM settings. c3 < 0 means "use C2 / 2".
struct SsimSpec {
    int window = 8;
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
    double c3 = -1.0;

    void validate() const;
    double c1() const { return (k1 * dynamic_range) * (k1 * dynamic_range); }
    double c2() const { return (k2 * dynamic_range) * (k2 * dynamic_range); }
    double effective_c3() const { return c3 < 0.0 ? c2() / 2.0 : c3; }
};

struct QualityReport {
    double mse = 0.0;
    double psnr = 0.0;
    double ssim = 0.0;
};

/// Mean of squared sample differences.
double mse(const LumaPlane& ref, const LumaPlane& cand);

/// 10 log10(255^2 / mse); +infinity for mse == 0.
double psnr(double mse_value);

/// Mean SSIM over every window position (stride 1). Variances and the
/// covariance use the N - 1 divisor.
double ssim(const LumaPlane& ref, const LumaPlane& cand, const SsimSpec& spec = {});

QualityReport evaluate(const LumaPlane& ref, const LumaPlane& cand, const SsimSpec& spec = {});

}  // namespace tfilter
