#include "tfilter/lut_io.hpp"

#include <bit>
#include <string>

#include "tfilter/frame_io.hpp"

namespace tfilter {

namespace {

constexpr std::uint8_t kMagic[4] = {'T', 'F', 'L', 'T'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t pos) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
    return v;
}

}  // namespace

std::size_t lut_file_size(int class_bits) {
    return kLutHeaderSize + (std::size_t{1} << class_bits) * kLutEntrySize;
}

std::vector<std::uint8_t> encode_lut(const CoefficientTable& table) {
    std::vector<std::uint8_t> out(kLutHeaderSize, 0);
    out.reserve(lut_file_size(table.class_bits()));
    std::copy(std::begin(kMagic), std::end(kMagic), out.begin());
    out[4] = kLutVersion;
    out[5] = static_cast<std::uint8_t>(kTaps);
    out[6] = static_cast<std::uint8_t>(table.class_bits());
    for (const auto& e : table.entries()) {
        put_u64(out, e.n);
        out.push_back(static_cast<std::uint8_t>(e.flag));
        for (double w : e.weights) put_u64(out, std::bit_cast<std::uint64_t>(w));
    }
    return out;
}

CoefficientTable decode_lut(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kLutHeaderSize || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin()))
        throw FormatError("lut: bad magic (expected TFLT)");
    if (bytes[7] != 0) throw FormatError("lut: reserved header byte is not zero");
    if (bytes[4] != kLutVersion)
        throw FormatError("lut: unsupported version " + std::to_string(bytes[4]));
    if (bytes[5] != kTaps)
        throw FormatError("lut: aperture size " + std::to_string(bytes[5]) + ", expected " +
                          std::to_string(kTaps));
    const int class_bits = bytes[6];
    if (class_bits != kAdrcBits && class_bits != kAdrcBits + 1)
        throw FormatError("lut: unsupported class_bits " + std::to_string(class_bits));
    if (bytes.size() != lut_file_size(class_bits))
        throw FormatError("lut: size " + std::to_string(bytes.size()) + ", expected " +
                          std::to_string(lut_file_size(class_bits)));

    std::vector<CoefficientEntry> entries(std::size_t{1} << class_bits);
    std::size_t pos = kLutHeaderSize;
    for (auto& e : entries) {
        e.n = get_u64(bytes, pos);
        const auto flag = bytes[pos + 8];
        if (flag > 1) throw FormatError("lut: bad flag byte " + std::to_string(flag));
        e.flag = static_cast<SolveFlag>(flag);
        pos += 9;
        for (auto& w : e.weights) {
            w = std::bit_cast<double>(get_u64(bytes, pos));
            pos += 8;
        }
    }
    return CoefficientTable(class_bits, std::move(entries));
}

void write_lut(const CoefficientTable& table, const std::filesystem::path& path) {
    write_file_atomic(path, encode_lut(table));
}

CoefficientTable read_lut(const std::filesystem::path& path) {
    try {
        return decode_lut(read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

}  // namespace tfilter
