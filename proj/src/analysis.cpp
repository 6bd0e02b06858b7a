#include "face/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "face/pipeline.hpp"

namespace face {

std::array<std::uint64_t, 256> histogram(const GrayImage& img) {
    std::array<std::uint64_t, 256> h{};
    for (std::uint8_t v : img.pixels) ++h[v];
    return h;
}

double shannon_entropy(const GrayImage& img) {
    if (img.pixels.empty()) throw std::invalid_argument("empty image");
    const std::array<std::uint64_t, 256> h = histogram(img);
    const double n = double(img.pixels.size());
    double acc = 0.0;
    for (std::uint64_t c : h) {
        if (c == 0) continue;
        const double p = double(c) / n;
        acc += p * std::log2(p);
    }
    return acc == 0.0 ? 0.0 : -acc;
}

double adjacent_correlation(const GrayImage& img, Direction dir) {
    const std::uint32_t w = img.width, h = img.height;
    std::uint32_t dx = 0, dy = 0;
    switch (dir) {
        case Direction::horizontal: dx = 1; break;
        case Direction::vertical: dy = 1; break;
        case Direction::diagonal: dx = 1, dy = 1; break;
    }
    if (w <= dx || h <= dy) throw std::invalid_argument("image too small for direction");

    const std::uint32_t xs = w - dx, ys = h - dy;
    const double n = double(xs) * double(ys);

    double sum_a = 0.0, sum_b = 0.0;
    for (std::uint32_t y = 0; y < ys; ++y) {
        for (std::uint32_t x = 0; x < xs; ++x) {
            sum_a += img.at(x, y);
            sum_b += img.at(x + dx, y + dy);
        }
    }
    const double mean_a = sum_a / n, mean_b = sum_b / n;

    double num = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::uint32_t y = 0; y < ys; ++y) {
        for (std::uint32_t x = 0; x < xs; ++x) {
            const double da = img.at(x, y) - mean_a;
            const double db = img.at(x + dx, y + dy) - mean_b;
            num += da * db;
            var_a += da * da;
            var_b += db * db;
        }
    }
    if (var_a == 0.0 || var_b == 0.0) return 0.0;
    return num / std::sqrt(var_a * var_b);
}

CorrelationReport correlation_report(const GrayImage& img) {
    CorrelationReport r;
    r.horizontal = adjacent_correlation(img, Direction::horizontal);
    r.vertical = adjacent_correlation(img, Direction::vertical);
    r.diagonal = adjacent_correlation(img, Direction::diagonal);
    r.mean_abs = (std::abs(r.horizontal) + std::abs(r.vertical) + std::abs(r.diagonal)) / 3.0;
    return r;
}

double chi_square_uniformity(const GrayImage& img) {
    if (img.pixels.empty()) throw std::invalid_argument("empty image");
    const std::array<std::uint64_t, 256> h = histogram(img);
    const double expected = double(img.pixels.size()) / 256.0;
    double acc = 0.0;
    for (std::uint64_t c : h) {
        const double d = double(c) - expected;
        acc += d * d / expected;
    }
    return acc;
}

NpcrUaci npcr_uaci(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    if (a.size() != b.size() || a.empty()) throw std::invalid_argument("length mismatch");
    std::uint64_t diff = 0, abs_sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = std::abs(int(a[i]) - int(b[i]));
        diff += d != 0;
        abs_sum += std::uint64_t(d);
    }
    const double n = double(a.size());
    return {100.0 * (double(diff) / n), 100.0 * (double(abs_sum) / 255.0) / n};
}

DifferentialReport differential_test(const GrayImage& img,
                                     const std::vector<std::uint8_t>& key_bytes,
                                     std::uint32_t row, std::uint32_t col, unsigned bit) {
    if (row >= img.height || col >= img.width || bit > 7) {
        throw std::invalid_argument("flip position out of bounds");
    }
    const CipherContainer c1 = encrypt(img, key_bytes);
    GrayImage flipped = img;
    flipped.at(col, row) ^= std::uint8_t(1u << bit);
    const CipherContainer c2 = encrypt(flipped, key_bytes);

    DifferentialReport rep;
    const NpcrUaci m = npcr_uaci(c1.cipher_pixels, c2.cipher_pixels);
    rep.npcr_percent = m.npcr_percent;
    rep.uaci_percent = m.uaci_percent;
    rep.diff_image = GrayImage(c1.padded_width, c1.padded_height);
    for (std::size_t i = 0; i < rep.diff_image.pixels.size(); ++i) {
        rep.diff_image.pixels[i] =
            std::uint8_t(std::abs(int(c1.cipher_pixels[i]) - int(c2.cipher_pixels[i])));
    }
    return rep;
}

}  // namespace face
