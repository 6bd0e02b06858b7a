#pragma once

#include "face/chaos.hpp"
#include "face/image.hpp"

namespace face {

// Stage 3: hash-chained XOR confusion over 16x16 blocks, row-major block
// order. C_i = B_i XOR S_i with S_1 = seed_matrix(init) and S_{i+1} =
// seed_matrix(hash_to_params(SHA-256(C_i bytes))). Throws
// std::invalid_argument "unaligned image" unless both dimensions are
// multiples of 16.
GrayImage confuse_image(const GrayImage& img, ChaoticParams init);

// Exact inverse; the seed chain depends only on ciphertext blocks, so it is
// reconstructed from the input before each XOR.
GrayImage deconfuse_image(const GrayImage& img, ChaoticParams init);

}  // namespace face
