#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "face/image.hpp"

namespace face {

enum class Direction { horizontal, vertical, diagonal };

struct CorrelationReport {
    double horizontal = 0.0;
    double vertical = 0.0;
    double diagonal = 0.0;
    double mean_abs = 0.0;  // mean of the absolute directional coefficients
};

struct DifferentialReport {
    double npcr_percent = 0.0;
    double uaci_percent = 0.0;
    GrayImage diff_image;  // |c1 - c2| over cipher pixels (padded dims)
};

std::array<std::uint64_t, 256> histogram(const GrayImage& img);

// Shannon entropy of the 256-bin intensity histogram, in [0, 8] bits;
// zero-probability bins contribute nothing.
double shannon_entropy(const GrayImage& img);

// Pearson correlation over all adjacent pixel pairs in the given direction
// (horizontal: (x,y)-(x+1,y); vertical: (x,y)-(x,y+1); diagonal:
// (x,y)-(x+1,y+1)), means taken over the paired series. Returns 0 when
// either series has zero variance. Throws std::invalid_argument when the
// image has no pair in the direction.
double adjacent_correlation(const GrayImage& img, Direction dir);

CorrelationReport correlation_report(const GrayImage& img);

// chi^2 = sum over bins of (count - n/256)^2 / (n/256).
double chi_square_uniformity(const GrayImage& img);

// NPCR (percent of differing positions) and UACI (mean |a-b| / 255, in
// percent) between two equal-length byte sequences.
struct NpcrUaci {
    double npcr_percent;
    double uaci_percent;
};
NpcrUaci npcr_uaci(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);

// Encrypts img and img-with-one-flipped-bit (bit `bit` of pixel (col, row))
// under the same key and compares the cipher pixels. Throws
// std::invalid_argument "flip position out of bounds" for a bad position.
DifferentialReport differential_test(const GrayImage& img,
                                     const std::vector<std::uint8_t>& key_bytes,
                                     std::uint32_t row, std::uint32_t col, unsigned bit = 0);

}  // namespace face
