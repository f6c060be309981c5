#include <gtest/gtest.h>

#include <fstream>

#include "test_util.hpp"
#include "tfilter/frame_io.hpp"

namespace tfilter {
namespace {

using testing::TempDir;

void write_bytes(const std::filesystem::path& p, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

Yuv422Frame random_frame(std::mt19937& rng, int w, int h) {
    return {testing::random_plane(rng, w, h), testing::random_plane(rng, w / 2, h),
            testing::random_plane(rng, w / 2, h)};
}

TEST(FrameIo, PalSizedFileHoldsOneFrame) {
    TempDir dir;
    write_bytes(dir / "pal.yuv", std::vector<std::uint8_t>(829'440, 16));
    const auto frames = read_sequence(dir / "pal.yuv", 720, 576);
    ASSERT_EQ(frames.size(), 1u);
    EXPECT_EQ(frames[0].y.width(), 720);
    EXPECT_EQ(frames[0].u.width(), 360);
    EXPECT_EQ(frames[0].v.height(), 576);
}

TEST(FrameIo, ZeroFrame) {
    const std::vector<std::uint8_t> bytes(16, 0);
    const auto frames = parse_sequence(bytes, 4, 2);
    ASSERT_EQ(frames.size(), 1u);
    for (auto s : frames[0].y.samples()) EXPECT_EQ(s, 0);
    for (auto s : frames[0].u.samples()) EXPECT_EQ(s, 0);
}

TEST(FrameIo, PlanarLayoutOrder) {
    std::vector<std::uint8_t> bytes(16);
    for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = static_cast<std::uint8_t>(i);
    const auto f = parse_sequence(bytes, 4, 2).front();
    EXPECT_EQ(f.y.at(3, 1), 7);
    EXPECT_EQ(f.u.at(0, 0), 8);
    EXPECT_EQ(f.u.at(1, 1), 11);
    EXPECT_EQ(f.v.at(0, 0), 12);
}

TEST(FrameIo, StrideMismatchIsRejected) {
    EXPECT_THROW(parse_sequence(std::vector<std::uint8_t>(40, 0), 4, 2), FormatError);
    EXPECT_THROW(parse_sequence(std::vector<std::uint8_t>{}, 4, 2), FormatError);
    EXPECT_THROW(parse_sequence(std::vector<std::uint8_t>(16, 0), 3, 2), InvalidArgument);
}

TEST(FrameIo, MissingFileIsIoError) {
    EXPECT_THROW(read_sequence("/nonexistent/none.yuv", 4, 2), IoError);
}

TEST(FrameIo, SequenceRoundTripIsByteExact) {
    std::mt19937 rng(7);
    TempDir dir;
    for (int trial = 0; trial < 10; ++trial) {
        const int w = 2 * std::uniform_int_distribution<int>(1, 20)(rng);
        const int h = std::uniform_int_distribution<int>(1, 20)(rng);
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<Yuv422Frame> frames;
        for (int i = 0; i < n; ++i) frames.push_back(random_frame(rng, w, h));
        const auto path = dir / "seq.yuv";
        write_sequence(frames, path);
        EXPECT_EQ(std::filesystem::file_size(path), static_cast<std::uintmax_t>(n) * 2 * w * h);
        EXPECT_EQ(read_sequence(path, w, h), frames);
    }
}

TEST(FrameIo, WriteRejectsEmptyAndMixedGeometry) {
    TempDir dir;
    std::mt19937 rng(1);
    EXPECT_THROW(write_sequence({}, dir / "a.yuv"), InvalidArgument);
    const std::vector<Yuv422Frame> mixed = {random_frame(rng, 4, 2), random_frame(rng, 6, 2)};
    EXPECT_THROW(write_sequence(mixed, dir / "b.yuv"), GeometryError);
    EXPECT_FALSE(std::filesystem::exists(dir / "b.yuv"));
    EXPECT_FALSE(std::filesystem::exists(dir / "b.yuv.part"));
}

TEST(FrameIo, PgmRoundTrip) {
    TempDir dir;
    const LumaPlane p(2, 2, std::vector<std::uint8_t>{0, 255, 128, 7});
    write_pgm(p, dir / "p.pgm");
    EXPECT_EQ(read_pgm(dir / "p.pgm"), p);
    EXPECT_EQ(std::filesystem::file_size(dir / "p.pgm"), std::string("P5\n2 2\n255\n").size() + 4);
}

TEST(FrameIo, PgmHeaderCommentsAreTolerated) {
    const std::string text = "P5\n# made by hand\n3 # width\n1\n255\n";
    std::vector<std::uint8_t> bytes(text.begin(), text.end());
    bytes.insert(bytes.end(), {1, 2, 3});
    const auto p = parse_pgm(bytes);
    EXPECT_EQ(p.width(), 3);
    EXPECT_EQ(p.at(2, 0), 3);
}

TEST(FrameIo, PgmRejectsUnsupportedVariants) {
    const auto bytes = [](const std::string& s) { return std::vector<std::uint8_t>(s.begin(), s.end()); };
    EXPECT_THROW(parse_pgm(bytes("P5\n1 1\n65535\n\x01\x02")), FormatError);
    EXPECT_THROW(parse_pgm(bytes("P2\n1 1\n255\n7\n")), FormatError);
    EXPECT_THROW(parse_pgm(bytes("P5\n2 2\n255\n\x01")), FormatError);
    EXPECT_THROW(parse_pgm(bytes("P5\nx 2\n255\n")), FormatError);
    EXPECT_THROW(parse_pgm(bytes("JUNK")), FormatError);
}

TEST(FrameIo, AtomicWriteLeavesNothingOnFailure) {
    const std::vector<std::uint8_t> data{1, 2, 3};
    EXPECT_THROW(write_file_atomic("/nonexistent_dir/x.bin", data), IoError);
}

TEST(FrameIo, FromLumaUsesNeutralChroma) {
    const auto f = Yuv422Frame::from_luma(LumaPlane(4, 2, std::uint8_t{9}));
    EXPECT_NO_THROW(validate_frame(f));
    EXPECT_EQ(f.u.at(1, 1), 128);
    EXPECT_THROW(Yuv422Frame::from_luma(LumaPlane(3, 2)), GeometryError);
}

}  // namespace
}  // namespace tfilter
