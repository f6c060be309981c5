#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "tfilter/plane.hpp"

namespace tfilter {

/// One planar 4:2:2 frame: full-size Y, then U and V at half width.
struct Yuv422Frame {
    LumaPlane y;
    Plane u;
    Plane v;

    /// Frame with the given luma and neutral (128) chroma.
    static Yuv422Frame from_luma(LumaPlane luma);

    int width() const { return y.width(); }
    int height() const { return y.height(); }
    std::size_t byte_size() const { return y.size() + u.size() + v.size(); }

    friend bool operator==(const Yuv422Frame&, const Yuv422Frame&) = default;
};

/// Checks the 4:2:2 layout invariants (even width, chroma (W/2)xH).
void validate_frame(const Yuv422Frame& frame);

/// Reads a headerless planar YUV 4:2:2 file. The file size must be a
/// positive multiple of 2*W*H.
std::vector<Yuv422Frame> read_sequence(const std::filesystem::path& path, int width, int height);

/// Parses an in-memory byte stream with the same layout as read_sequence.
std::vector<Yuv422Frame> parse_sequence(std::span<const std::uint8_t> bytes, int width,
                                        int height);

void write_sequence(std::span<const Yuv422Frame> frames, const std::filesystem::path& path);

/// Binary greyscale (P5) image, maxval 255. Header comments are accepted.
LumaPlane read_pgm(const std::filesystem::path& path);
LumaPlane parse_pgm(std::span<const std::uint8_t> bytes);

void write_pgm(const LumaPlane& plane, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_pgm(const LumaPlane& plane);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failure never leaves a partial output behind.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace tfilter
