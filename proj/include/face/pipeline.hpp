#pragma once

#include <cstdint>
#include <vector>

#include "face/container.hpp"
#include "face/image.hpp"
#include "face/key_material.hpp"

namespace face {

// Full forward pipeline: pad -> segment -> permute -> confuse; the
// segmentation index map travels in the container XOR-masked with the
// mask-stage keystream. Deterministic: equal (img, key) pairs give
// bitwise-equal containers.
CipherContainer encrypt(const GrayImage& img, const std::vector<std::uint8_t>& key_bytes);

// Inverse pipeline: deconfuse -> inverse permute -> unmask index map ->
// unsegment -> crop. Throws std::runtime_error "wrong key or corrupted
// container" when the unmasked index map is not a bijection (the cheap
// wrong-key detector).
GrayImage decrypt(const CipherContainer& c, const std::vector<std::uint8_t>& key_bytes);

// Convenience byte-level forms.
std::vector<std::uint8_t> encrypt_to_bytes(const GrayImage& img,
                                           const std::vector<std::uint8_t>& key_bytes);
GrayImage decrypt_from_bytes(const std::vector<std::uint8_t>& blob,
                             const std::vector<std::uint8_t>& key_bytes);

}  // namespace face
