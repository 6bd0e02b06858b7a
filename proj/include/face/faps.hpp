#pragma once

#include <cstdint>
#include <vector>

#include "face/image.hpp"

namespace face {

// Sobel responses. Kernel weights and 8-bit samples keep every value an
// exact (small) integer, so the grids are stored as int32.
struct GradientPair {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::int32_t> gx;
    std::vector<std::int32_t> gy;
};

// Normalized edge intensities in [0, 1].
struct EdgeMap {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<double> e;
};

// Segmentation result: index_map[p] = original linear (row-major) index of
// the pixel placed at output position p; always a bijection. threshold is
// the edge threshold the classification used.
struct FapsRecord {
    std::vector<std::uint32_t> index_map;
    double threshold = 0.0;
};

// 3x3 Sobel responses with replicate border padding:
//   gx kernel [[-1,0,+1],[-2,0,+2],[-1,0,+1]]
//   gy kernel [[+1,+2,+1],[0,0,0],[-1,-2,-1]]
// (matrices applied in correlation orientation).
GradientPair sobel_gradients(const GrayImage& img);

// e = sqrt(gx^2 + gy^2) / max over the grid; identically 0 when the
// gradients vanish everywhere.
EdgeMap edge_map(const GradientPair& g);

// Threshold maximizing the between-class variance over a 256-bin equal-width
// histogram of [0, 1]; candidates are the bin upper edges (k+1)/256, the
// smallest wins ties, and a constant (single-bin) map yields 0.
double otsu_threshold(const EdgeMap& e);

// true = high-edge, i.e. e > t strictly; boundary values are low-edge.
std::vector<bool> classify_pixels(const EdgeMap& e, double t);

// Full first stage: high-edge pixels sorted by intensity descending, then
// low-edge ascending, both with ascending-original-index tie-breaks, written
// row-major into the output. The record holds the inverse information.
std::pair<GrayImage, FapsRecord> segment(const GrayImage& img);

// Exact inverse: out[rec.index_map[p]] = seg[p]. Throws
// std::invalid_argument "invalid FAPS record" on length mismatch or a
// non-bijective map.
GrayImage unsegment(const GrayImage& seg, const FapsRecord& rec);

}  // namespace face
