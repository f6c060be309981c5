#include "tfilter/frame_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

namespace tfilter {

namespace fs = std::filesystem;

Yuv422Frame Yuv422Frame::from_luma(LumaPlane luma) {
    if (luma.width() % 2 != 0)
        throw GeometryError("4:2:2 frames need an even width, got " +
                            std::to_string(luma.width()));
    Plane u(luma.width() / 2, luma.height(), std::uint8_t{128});
    Plane v = u;
    return {std::move(luma), std::move(u), std::move(v)};
}

void validate_frame(const Yuv422Frame& frame) {
    if (frame.y.empty()) throw GeometryError("frame has no luma plane");
    if (frame.y.width() % 2 != 0)
        throw GeometryError("4:2:2 frames need an even width, got " +
                            std::to_string(frame.y.width()));
    const int cw = frame.y.width() / 2;
    const int ch = frame.y.height();
    for (const Plane* c : {&frame.u, &frame.v}) {
        if (c->width() != cw || c->height() != ch)
            throw GeometryError("chroma plane is " + geometry_string(*c) + ", expected " +
                                std::to_string(cw) + "x" + std::to_string(ch));
    }
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
    fs::path tmp = path;
    tmp += ".part";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                      ec.message());
    }
}

std::vector<Yuv422Frame> parse_sequence(std::span<const std::uint8_t> bytes, int width,
                                        int height) {
    if (width <= 0 || height <= 0)
        throw InvalidArgument("frame geometry must be positive");
    if (width % 2 != 0)
        throw InvalidArgument("4:2:2 frame width must be even, got " + std::to_string(width));
    const std::size_t luma = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    const std::size_t stride = 2 * luma;
    if (bytes.empty() || bytes.size() % stride != 0)
        throw FormatError("size " + std::to_string(bytes.size()) +
                          " bytes is not a positive multiple of the " + std::to_string(width) +
                          "x" + std::to_string(height) + " 4:2:2 frame size (" +
                          std::to_string(stride) + " bytes)");

    const std::size_t chroma = luma / 2;
    std::vector<Yuv422Frame> frames;
    frames.reserve(bytes.size() / stride);
    for (std::size_t off = 0; off < bytes.size(); off += stride) {
        auto take = [&](std::size_t start, std::size_t n) {
            auto first = bytes.begin() + static_cast<std::ptrdiff_t>(off + start);
            return std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(n));
        };
        frames.push_back({Plane(width, height, take(0, luma)),
                          Plane(width / 2, height, take(luma, chroma)),
                          Plane(width / 2, height, take(luma + chroma, chroma))});
    }
    return frames;
}

std::vector<Yuv422Frame> read_sequence(const fs::path& path, int width, int height) {
    try {
        return parse_sequence(read_file(path), width, height);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_sequence(std::span<const Yuv422Frame> frames, const fs::path& path) {
    if (frames.empty()) throw InvalidArgument("no frames to write");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(frames.size() * frames.front().byte_size());
    for (const auto& f : frames) {
        validate_frame(f);
        if (!f.y.same_geometry(frames.front().y))
            throw GeometryError("frames of a sequence must share one geometry (" +
                                geometry_string(frames.front().y) + " vs " +
                                geometry_string(f.y) + ")");
        for (const Plane* p : {&f.y, &f.u, &f.v})
            bytes.insert(bytes.end(), p->samples().begin(), p->samples().end());
    }
    write_file_atomic(path, bytes);
}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    long number(const char* what) {
        skip_space_and_comments();
        long v = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > 1'000'000) throw FormatError(std::string("pgm: ") + what + " too large");
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw FormatError(std::string("pgm: malformed ") + what);
        return v;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

LumaPlane parse_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P')
        throw FormatError("pgm: missing magic number");
    if (bytes[1] != '5')
        throw FormatError(std::string("pgm: unsupported format P") + static_cast<char>(bytes[1]) +
                          " (only binary P5 is supported)");
    HeaderReader hr(bytes);
    hr.advance(2);
    const long w = hr.number("width");
    const long h = hr.number("height");
    const long maxval = hr.number("maxval");
    if (w <= 0 || h <= 0) throw FormatError("pgm: dimensions must be positive");
    if (maxval != 255)
        throw FormatError("pgm: unsupported depth, maxval " + std::to_string(maxval) +
                          " (only 255 is supported)");
    if (hr.pos() >= bytes.size() || !std::isspace(bytes[hr.pos()]))
        throw FormatError("pgm: malformed header");
    hr.advance(1);
    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    if (bytes.size() - hr.pos() < n) throw FormatError("pgm: truncated pixel data");
    auto first = bytes.begin() + static_cast<std::ptrdiff_t>(hr.pos());
    return Plane(static_cast<int>(w), static_cast<int>(h),
                 std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(n)));
}

LumaPlane read_pgm(const fs::path& path) {
    try {
        return parse_pgm(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_pgm(const LumaPlane& plane) {
    const std::string header = "P5\n" + std::to_string(plane.width()) + " " +
                               std::to_string(plane.height()) + "\n255\n";
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    bytes.insert(bytes.end(), plane.samples().begin(), plane.samples().end());
    return bytes;
}

void write_pgm(const LumaPlane& plane, const fs::path& path) {
    if (plane.empty()) throw InvalidArgument("cannot write an empty plane");
    write_file_atomic(path, encode_pgm(plane));
}

}  // namespace tfilter
