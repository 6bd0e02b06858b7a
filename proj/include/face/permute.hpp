#pragma once

#include "face/chaos.hpp"
#include "face/image.hpp"

namespace face {

// Stage 2: hash-chained permutation over 32x32 blocks, row-major block
// order. Block i is flattened row-major (1024 bytes), shuffled by
// permutation_sequence(params_i, 1024) as a gather (out[j] = in[pi[j]]),
// then params_{i+1} = hash_to_params(SHA-256(permuted bytes)); params_1 =
// init. Throws std::invalid_argument "unaligned image" unless both
// dimensions are multiples of 32.
GrayImage permute_image(const GrayImage& img, ChaoticParams init);

// Exact inverse. Self-synchronizing: each block's hash is taken over the
// ciphertext block (the permuted bytes), which the decryptor already has.
GrayImage inverse_permute(const GrayImage& img, ChaoticParams init);

}  // namespace face
