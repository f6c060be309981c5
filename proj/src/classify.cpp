#include "tfilter/classify.hpp"

#include <algorithm>
#include <cmath>

namespace tfilter {

std::string_view to_string(ComplexityMode mode) {
    switch (mode) {
        case ComplexityMode::none: return "none";
        case ComplexityMode::std_dev: return "std";
        case ComplexityMode::dynamic_range: return "dr";
        case ComplexityMode::entropy: return "entropy";
    }
    return "?";
}

ComplexityMode parse_complexity_mode(std::string_view name) {
    if (name == "none") return ComplexityMode::none;
    if (name == "std") return ComplexityMode::std_dev;
    if (name == "dr") return ComplexityMode::dynamic_range;
    if (name == "entropy") return ComplexityMode::entropy;
    throw InvalidArgument("unknown class mode '" + std::string(name) +
                          "' (expected none, std, dr or entropy)");
}

double ClassifierSpec::default_threshold(ComplexityMode mode) {
    switch (mode) {
        case ComplexityMode::std_dev: return 10.0;
        case ComplexityMode::dynamic_range: return 32.0;
        case ComplexityMode::entropy: return 1.0;
        case ComplexityMode::none: break;
    }
    return 0.0;
}

void ClassifierSpec::validate() const {
    if (!(threshold >= 0.0) || !std::isfinite(threshold))
        throw InvalidArgument("class threshold must be a finite value >= 0");
}

Aperture extract_aperture(const LumaPlane& plane, int x, int y) {
    if (x < 0 || y < 0 || x >= plane.width() || y >= plane.height())
        throw InvalidArgument("aperture centre (" + std::to_string(x) + ", " + std::to_string(y) +
                              ") lies outside the " + geometry_string(plane) + " plane");
    Aperture ap{};
    for (int k = 0; k < kApertureSize; ++k) {
        const auto o = kApertureOffsets[static_cast<std::size_t>(k)];
        ap[static_cast<std::size_t>(k)] = plane.clamped(x + o.dx, y + o.dy);
    }
    return ap;
}

std::uint32_t adrc_bits(const Aperture& ap) {
    double sum = 0.0;
    for (double v : ap) sum += v;
    // v > sum / 13 without the division, exact for integer samples
    std::uint32_t bits = 0;
    for (int k = 0; k < kApertureSize; ++k)
        if (ap[static_cast<std::size_t>(k)] * kApertureSize > sum) bits |= 1u << k;
    return bits;
}

double population_std_dev(const Aperture& ap) {
    double mean = 0.0;
    for (double v : ap) mean += v;
    mean /= kApertureSize;
    double ss = 0.0;
    for (double v : ap) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / kApertureSize);
}

double dynamic_range(const Aperture& ap) {
    const auto [lo, hi] = std::minmax_element(ap.begin(), ap.end());
    return *hi - *lo;
}

double local_entropy(const Aperture& ap) {
    Aperture sorted = ap;
    std::sort(sorted.begin(), sorted.end());
    double h = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const double p = static_cast<double>(j - i) / kApertureSize;
        h -= p * std::log2(p);
        i = j;
    }
    return h;
}

int complexity_bit(const Aperture& ap, const ClassifierSpec& spec) {
    switch (spec.mode) {
        case ComplexityMode::none: return 0;
        case ComplexityMode::std_dev: return population_std_dev(ap) >= spec.threshold ? 1 : 0;
        case ComplexityMode::dynamic_range: return dynamic_range(ap) >= spec.threshold ? 1 : 0;
        case ComplexityMode::entropy: return local_entropy(ap) >= spec.threshold ? 1 : 0;
    }
    return 0;
}

ClassId classify(const Aperture& ap, const ClassifierSpec& spec) {
    ClassId id = adrc_bits(ap);
    if (spec.mode != ComplexityMode::none)
        id |= static_cast<ClassId>(complexity_bit(ap, spec)) << kAdrcBits;
    return id;
}

}  // namespace tfilter
