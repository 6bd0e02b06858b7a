#include "face/container.hpp"

#include <cstring>
#include <stdexcept>

namespace face {

namespace {

const std::uint8_t kMagic[4] = {'F', 'A', 'C', 'E'};

void put_u32le(std::uint8_t* p, std::uint32_t v) {
    p[0] = std::uint8_t(v);
    p[1] = std::uint8_t(v >> 8);
    p[2] = std::uint8_t(v >> 16);
    p[3] = std::uint8_t(v >> 24);
}

std::uint32_t get_u32le(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) | (std::uint32_t(p[2]) << 16) |
           (std::uint32_t(p[3]) << 24);
}

void check_dims(const CipherContainer& c) {
    const bool ok = c.padded_width != 0 && c.padded_height != 0 && c.padded_width % 32 == 0 &&
                    c.padded_height % 32 == 0 && c.orig_width != 0 && c.orig_height != 0 &&
                    c.orig_width <= c.padded_width && c.orig_height <= c.padded_height;
    if (!ok) throw std::runtime_error("invalid dimensions");
}

}  // namespace

std::vector<std::uint8_t> serialize_container(const CipherContainer& c) {
    check_dims(c);
    const std::uint64_t area = std::uint64_t(c.padded_width) * c.padded_height;
    if (c.masked_faps.size() != 4 * area || c.cipher_pixels.size() != area) {
        throw std::runtime_error("invalid dimensions");
    }
    std::vector<std::uint8_t> out(kContainerHeaderSize + 5 * area);
    std::memcpy(out.data(), kMagic, 4);
    out[4] = kContainerVersion;
    put_u32le(&out[5], c.orig_width);
    put_u32le(&out[9], c.orig_height);
    put_u32le(&out[13], c.padded_width);
    put_u32le(&out[17], c.padded_height);
    std::memcpy(&out[kContainerHeaderSize], c.masked_faps.data(), c.masked_faps.size());
    std::memcpy(&out[kContainerHeaderSize + 4 * area], c.cipher_pixels.data(),
                c.cipher_pixels.size());
    return out;
}

CipherContainer deserialize_container(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < kContainerHeaderSize) throw std::runtime_error("truncated container");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw std::runtime_error("bad magic");
    if (bytes[4] != kContainerVersion) throw std::runtime_error("unsupported version");

    CipherContainer c;
    c.orig_width = get_u32le(&bytes[5]);
    c.orig_height = get_u32le(&bytes[9]);
    c.padded_width = get_u32le(&bytes[13]);
    c.padded_height = get_u32le(&bytes[17]);
    check_dims(c);

    const std::uint64_t area = std::uint64_t(c.padded_width) * c.padded_height;
    const std::uint64_t expected = kContainerHeaderSize + 5 * area;
    if (bytes.size() != expected) throw std::runtime_error("truncated container");

    const std::uint8_t* body = bytes.data() + kContainerHeaderSize;
    c.masked_faps.assign(body, body + 4 * area);
    c.cipher_pixels.assign(body + 4 * area, body + 5 * area);
    return c;
}

bool looks_like_container(const std::vector<std::uint8_t>& bytes) {
    return bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0;
}

}  // namespace face
