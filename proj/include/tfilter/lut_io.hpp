#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "tfilter/lsq.hpp"

namespace tfilter {

// LUT file layout (all integers and doubles little-endian):
//   "TFLT", version 0x01, aperture size (13), class_bits, 1 reserved zero byte
//   per class id ascending: u64 sample count, u8 flag, 13 x f64 weights
inline constexpr std::uint8_t kLutVersion = 1;
inline constexpr std::size_t kLutHeaderSize = 8;
inline constexpr std::size_t kLutEntrySize = 8 + 1 + 8 * kTaps;

std::size_t lut_file_size(int class_bits);

std::vector<std::uint8_t> encode_lut(const CoefficientTable& table);
CoefficientTable decode_lut(std::span<const std::uint8_t> bytes);

void write_lut(const CoefficientTable& table, const std::filesystem::path& path);
CoefficientTable read_lut(const std::filesystem::path& path);

}  // namespace tfilter
