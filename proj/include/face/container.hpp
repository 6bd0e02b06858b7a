#pragma once

#include <cstdint>
#include <vector>

namespace face {

// Serialized ciphertext. Byte layout (integers little-endian):
//   offset  0: magic "FACE"
//   offset  4: version u8 = 1
//   offset  5: orig_width u32, orig_height u32, padded_width u32,
//              padded_height u32
//   offset 21: masked_faps, 4 * padded_width * padded_height bytes
//   then     : cipher_pixels, padded_width * padded_height bytes, row-major
struct CipherContainer {
    std::uint32_t orig_width = 0;
    std::uint32_t orig_height = 0;
    std::uint32_t padded_width = 0;
    std::uint32_t padded_height = 0;
    std::vector<std::uint8_t> masked_faps;
    std::vector<std::uint8_t> cipher_pixels;

    bool operator==(const CipherContainer&) const = default;
};

inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 21;

std::vector<std::uint8_t> serialize_container(const CipherContainer& c);

// Throws std::runtime_error: "bad magic", "unsupported version",
// "truncated container" (byte count shorter than or inconsistent with the
// header), or "invalid dimensions" (header violates the container
// invariants).
CipherContainer deserialize_container(const std::vector<std::uint8_t>& bytes);

// True when the buffer starts with the container magic.
bool looks_like_container(const std::vector<std::uint8_t>& bytes);

}  // namespace face
