#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tfilter/error.hpp"

namespace tfilter {

/// Rectangular grid of 8-bit samples stored row-major.
///
/// Used for luma planes and, with the same layout, for the chroma planes of a
/// 4:2:2 frame. All processing in this library works on a single plane.
class Plane {
public:
    Plane() = default;

    Plane(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height) {
        if (width <= 0 || height <= 0)
            throw InvalidArgument("plane dimensions must be positive, got " +
                                  std::to_string(width) + "x" + std::to_string(height));
        samples_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    Plane(int width, int height, std::vector<std::uint8_t> samples)
        : width_(width), height_(height), samples_(std::move(samples)) {
        if (width <= 0 || height <= 0)
            throw InvalidArgument("plane dimensions must be positive");
        if (samples_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
            throw GeometryError("sample count " + std::to_string(samples_.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

    std::uint8_t at(int x, int y) const {
        return samples_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::uint8_t& at(int x, int y) {
        return samples_[static_cast<std::size_t>(y) * width_ + x];
    }

    /// Sample with coordinates clamped into the plane (edge replication).
    std::uint8_t clamped(int x, int y) const {
        return at(std::clamp(x, 0, width_ - 1), std::clamp(y, 0, height_ - 1));
    }

    std::span<const std::uint8_t> row(int y) const {
        return {samples_.data() + static_cast<std::size_t>(y) * width_,
                static_cast<std::size_t>(width_)};
    }

    std::span<const std::uint8_t> samples() const { return samples_; }
    std::span<std::uint8_t> samples() { return samples_; }

    bool same_geometry(const Plane& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

    friend bool operator==(const Plane&, const Plane&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> samples_;
};

using LumaPlane = Plane;

/// Round half away from zero, then clamp into [0, 255].
inline std::uint8_t to_sample(double v) {
    const double r = std::round(v);
    if (!(r > 0.0)) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

inline std::string geometry_string(const Plane& p) {
    return std::to_string(p.width()) + "x" + std::to_string(p.height());
}

inline void require_same_geometry(const Plane& a, const Plane& b, const char* what) {
    if (!a.same_geometry(b))
        throw GeometryError(std::string(what) + ": geometry mismatch " + geometry_string(a) +
                            " vs " + geometry_string(b));
}

}  // namespace tfilter
