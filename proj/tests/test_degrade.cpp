#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "boundary_energy.hpp"
#include "test_util.hpp"
#include "tfilter/degrade.hpp"

namespace tfilter {
namespace {

LumaPlane from_rows(const std::vector<std::vector<int>>& rows) {
    LumaPlane p(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int y = 0; y < p.height(); ++y)
        for (int x = 0; x < p.width(); ++x) p.at(x, y) = static_cast<std::uint8_t>(rows[y][x]);
    return p;
}

double variance(const std::vector<double>& v) {
    const double m = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / v.size();
}

TEST(Compression, ScaledTableFollowsQualityRule) {
    const auto q20 = scaled_quant_table(20);
    EXPECT_EQ(q20[0], 40);   // (16 * 250 + 50) / 100
    EXPECT_EQ(q20[63], 248); // (99 * 250 + 50) / 100
    const auto q50 = scaled_quant_table(50);
    EXPECT_EQ(q50, kJpegLumaTable);
    const auto q100 = scaled_quant_table(100);
    for (int q : q100) EXPECT_EQ(q, 1);
    EXPECT_THROW(scaled_quant_table(0), InvalidArgument);
    EXPECT_THROW(scaled_quant_table(101), InvalidArgument);
}

TEST(Compression, MidGreyIsAFixedPoint) {
    const LumaPlane p(19, 13, std::uint8_t{128});
    EXPECT_EQ(compress_blocky(p, {20}), p);
}

TEST(Compression, ConstantPlaneStaysWithinDcStep) {
    // DC = 8 * 72 = 576, quantizer 40 -> 14 * 40 = 560 -> 560 / 8 + 128 = 198.
    const LumaPlane p(16, 16, std::uint8_t{200});
    const auto out = compress_blocky(p, {20});
    const double q00 = scaled_quant_table(20)[0];
    for (auto s : out.samples()) {
        EXPECT_LE(std::abs(int(s) - 200), q00 / 16.0);
        EXPECT_EQ(s, 198);
    }
}

TEST(Compression, BlockMatchesDirectDctGolden) {
    // Frozen from a direct double-sum DCT/quantize/IDCT evaluation.
    const auto block = from_rows({{0, 29, 58, 87, 116, 145, 174, 203},
                                  {17, 57, 97, 137, 177, 217, 1, 220},
                                  {34, 85, 136, 187, 161, 212, 7, 237},
                                  {51, 113, 175, 160, 222, 207, 13, 254},
                                  {68, 141, 137, 210, 206, 23, 19, 15},
                                  {85, 169, 176, 183, 11, 18, 25, 32},
                                  {102, 197, 215, 233, 251, 13, 31, 49},
                                  {119, 148, 177, 206, 235, 8, 37, 66}});
    EXPECT_EQ(compress_blocky(block, {20}),
              from_rows({{0, 84, 34, 105, 120, 187, 144, 239},
                         {40, 63, 105, 142, 140, 176, 23, 200},
                         {74, 33, 162, 190, 203, 209, 0, 235},
                         {53, 74, 160, 190, 219, 168, 36, 197},
                         {48, 189, 140, 151, 169, 26, 31, 36},
                         {58, 251, 146, 145, 171, 0, 54, 0},
                         {82, 206, 183, 174, 224, 10, 58, 61},
                         {121, 142, 219, 190, 246, 26, 0, 88}}));
    EXPECT_EQ(compress_blocky(block, {75}),
              from_rows({{0, 36, 61, 93, 127, 139, 159, 221},
                         {13, 45, 105, 118, 182, 236, 6, 206},
                         {44, 80, 155, 181, 159, 207, 0, 247},
                         {52, 106, 168, 173, 218, 205, 32, 242},
                         {73, 141, 142, 196, 222, 13, 4, 23},
                         {69, 192, 167, 189, 6, 26, 33, 20},
                         {111, 190, 210, 238, 244, 15, 29, 55},
                         {121, 145, 190, 194, 237, 15, 33, 63}}));
}

TEST(Compression, LowQualityIsBlocky) {
    const auto edge = testing::step_edge(96, 96);
    const double low = testing::blockiness(compress_blocky(edge, {20}));
    const double high = testing::blockiness(compress_blocky(edge, {95}));
    EXPECT_GT(low, 1.5);
    EXPECT_GT(low, 1.5 * high);
}

TEST(Compression, OddSizesArePaddedAndCropped) {
    std::mt19937 rng(3);
    const auto p = testing::random_plane(rng, 13, 9);
    const auto out = compress_blocky(p, {50});
    EXPECT_TRUE(out.same_geometry(p));
    EXPECT_EQ(compress_blocky(p, {50}), out);
}

TEST(Gaussian, KernelTaps) {
    const auto k = gaussian_kernel({2, 1.0});
    ASSERT_EQ(k.size(), 5u);
    EXPECT_NEAR(k[0], 0.05448868, 1e-8);
    EXPECT_NEAR(k[1], 0.24420134, 1e-8);
    EXPECT_NEAR(k[2], 0.40261995, 1e-8);
    EXPECT_DOUBLE_EQ(k[0], k[4]);
    EXPECT_NEAR(std::accumulate(k.begin(), k.end(), 0.0), 1.0, 1e-15);
    EXPECT_THROW(gaussian_kernel({0, 1.0}), InvalidArgument);
    EXPECT_THROW(gaussian_kernel({2, 0.0}), InvalidArgument);
}

TEST(Gaussian, ConstantIsPreserved) {
    const LumaPlane p(11, 7, std::uint8_t{77});
    EXPECT_EQ(gaussian_blur(p), p);
}

TEST(Gaussian, ImpulseResponseIsScaledOuterProduct) {
    LumaPlane p(9, 9, std::uint8_t{0});
    p.at(4, 4) = 255;
    const auto out = gaussian_blur(p);
    const int expected[5][5] = {{1, 3, 6, 3, 1},
                                {3, 15, 25, 15, 3},
                                {6, 25, 41, 25, 6},
                                {3, 15, 25, 15, 3},
                                {1, 3, 6, 3, 1}};
    for (int y = 0; y < 9; ++y)
        for (int x = 0; x < 9; ++x) {
            const bool inside = std::abs(x - 4) <= 2 && std::abs(y - 4) <= 2;
            EXPECT_EQ(out.at(x, y), inside ? expected[y - 2][x - 2] : 0) << x << "," << y;
        }
}

TEST(Gaussian, ReducesVarianceBeforeRounding) {
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto p = testing::random_plane(rng, 16, 12);
        const std::vector<double> in(p.samples().begin(), p.samples().end());
        EXPECT_LT(variance(convolve_separable_real(p, gaussian_kernel({}))), variance(in));
    }
}

TEST(Gaussian, MeanIsApproximatelyPreserved) {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto p = testing::random_plane(rng, 24, 20, 10, 240);
        const auto q = gaussian_blur(p);
        const auto mean = [](const LumaPlane& x) {
            return std::accumulate(x.samples().begin(), x.samples().end(), 0.0) / x.size();
        };
        const auto [lo, hi] = std::minmax_element(p.samples().begin(), p.samples().end());
        const double bound = 0.5 + 2.0 * (*hi - *lo) * (2.0 * (24 + 20)) / (24 * 20);
        EXPECT_LE(std::abs(mean(q) - mean(p)), bound);
    }
}

TEST(Downsample, AveragesBlocks) {
    EXPECT_EQ(downsample_2x(from_rows({{10, 20}, {30, 40}})).at(0, 0), 25);
    EXPECT_EQ(downsample_2x(from_rows({{0, 0}, {0, 1}})).at(0, 0), 0);
    EXPECT_EQ(downsample_2x(from_rows({{0, 0}, {1, 1}})).at(0, 0), 1);   // 0.5 rounds up
    EXPECT_EQ(downsample_2x(from_rows({{0, 1}, {1, 1}})).at(0, 0), 1);   // 0.75
    EXPECT_EQ(downsample_2x(from_rows({{255, 255}, {255, 254}})).at(0, 0), 255);
}

TEST(Downsample, ConstantAndGeometry) {
    const LumaPlane p(8, 6, std::uint8_t{93});
    EXPECT_EQ(downsample_2x(p), LumaPlane(4, 3, std::uint8_t{93}));
    EXPECT_THROW(downsample_2x(LumaPlane(7, 6)), GeometryError);
    EXPECT_THROW(downsample_2x(LumaPlane(8, 5)), GeometryError);
}

TEST(Degrade, AllOperationsAreDeterministic) {
    std::mt19937 rng(99);
    const auto p = testing::random_plane(rng, 32, 24);
    EXPECT_EQ(compress_blocky(p), compress_blocky(p));
    EXPECT_EQ(gaussian_blur(p), gaussian_blur(p));
    EXPECT_EQ(downsample_2x(p), downsample_2x(p));
}

}  // namespace
}  // namespace tfilter
