#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "face/sha256.hpp"

namespace face {

// Smallest/largest admissible logistic state: the absorbing fixed points 0
// and 1 are excluded by clamping to [2^-32, 1 - 2^-32].
inline constexpr double kChaosMin = 0x1p-32;
inline constexpr double kChaosMax = 1.0 - 0x1p-32;

// Logistic-map state x and control parameter r.
// Invariants: 0 < x < 1 (clamp-enforced), 3.9 <= r < 4.0.
struct ChaoticParams {
    double x;
    double r;

    bool operator==(const ChaoticParams&) const = default;
};

// One logistic iteration x' = r*x*(1-x), evaluated exactly as
// (r * x) * (1 - x) in binary64. Out-of-range results clamp back into
// [2^-32, 1 - 2^-32]; r is unchanged.
ChaoticParams logistic_step(ChaoticParams p);

// Map a 32-byte digest to chaotic parameters:
//   x = (first 8 bytes, big-endian) / 2^64, clamped as above;
//   r = 3.9 + 0.1 * (m / 100) where m = the full 256-bit big-endian value
//       reduced mod 100 (byte-wise Horner).
ChaoticParams hash_to_params(const Digest& h);

// Byte-wise Horner reduction of a digest mod 100 (exposed for verification).
unsigned digest_mod100(const Digest& h);

// Iterate 100 burn-in steps from p, then return the next n states in order.
std::vector<double> chaotic_sequence(ChaoticParams p, std::size_t n);

// Indices of `values` in ascending order of value; equal values keep
// ascending-index order.
std::vector<std::uint32_t> stable_argsort(const std::vector<double>& values);

// Ascending stable argsort of chaotic_sequence(p, n): out[j] is the index of
// the j-th smallest value. Always a bijection on {0, ..., n-1}.
std::vector<std::uint32_t> permutation_sequence(ChaoticParams p, std::size_t n);

// Chaotic byte stream: byte[i] = floor(value_i * 10^14) mod 256. The 10^14
// scale reads digits far below the logistic map's invariant-density
// structure, which keeps the byte distribution uniform; floor(x * 1e14) is
// exact in binary64 since the product stays under 2^53.
std::vector<std::uint8_t> keystream(ChaoticParams p, std::size_t len);

// 16x16 seed matrix, row-major: exactly keystream(p, 256).
std::array<std::uint8_t, 256> seed_matrix(ChaoticParams p);

}  // namespace face
