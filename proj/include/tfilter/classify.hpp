#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "tfilter/plane.hpp"

namespace tfilter {

inline constexpr int kApertureSize = 13;

struct Offset {
    int dx;
    int dy;
};

/// The |dx| + |dy| <= 2 diamond, scanned row by row (dy = -2..2), then by dx.
inline constexpr std::array<Offset, kApertureSize> kApertureOffsets = {{
    {0, -2},
    {-1, -1}, {0, -1}, {1, -1},
    {-2, 0}, {-1, 0}, {0, 0}, {1, 0}, {2, 0},
    {-1, 1}, {0, 1}, {1, 1},
    {0, 2},
}};

/// Position of the (0, 0) offset within the scan.
inline constexpr int kCenterIndex = 6;
static_assert(kApertureOffsets[kCenterIndex].dx == 0 && kApertureOffsets[kCenterIndex].dy == 0);

using Aperture = std::array<double, kApertureSize>;

using ClassId = std::uint32_t;

inline constexpr int kAdrcBits = kApertureSize;

enum class ComplexityMode { none, std_dev, dynamic_range, entropy };

std::string_view to_string(ComplexityMode mode);
/// Accepts "none", "std", "dr" and "entropy".
ComplexityMode parse_complexity_mode(std::string_view name);

struct ClassifierSpec {
    ComplexityMode mode = ComplexityMode::none;
    double threshold = 0.0;

    /// 13 for ADRC alone, 14 with a complexity bit.
    int class_bits() const { return mode == ComplexityMode::none ? kAdrcBits : kAdrcBits + 1; }
    std::size_t class_count() const { return std::size_t{1} << class_bits(); }
    void validate() const;

    /// Default thresholds: 10 levels of standard deviation, 32 levels of range,
    /// 1 bit of entropy.
    static double default_threshold(ComplexityMode mode);
    static ClassifierSpec with_default_threshold(ComplexityMode mode) {
        return {mode, default_threshold(mode)};
    }
};

/// Reads the diamond around (x, y); off-plane offsets are edge-replicated.
Aperture extract_aperture(const LumaPlane& plane, int x, int y);

/// Bit k is set when sample k exceeds the aperture mean. Ties give 0.
std::uint32_t adrc_bits(const Aperture& ap);

double population_std_dev(const Aperture& ap);
double dynamic_range(const Aperture& ap);
/// Shannon entropy (bits) of the histogram of sample values in the aperture.
double local_entropy(const Aperture& ap);

int complexity_bit(const Aperture& ap, const ClassifierSpec& spec);

/// ADRC bits in positions 0..12, complexity bit (if any) at position 13.
ClassId classify(const Aperture& ap, const ClassifierSpec& spec);

}  // namespace tfilter
