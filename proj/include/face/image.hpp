#pragma once

#include <cstdint>
#include <vector>

namespace face {

// 8-bit grayscale image, row-major.
struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> pixels;  // length == width * height

    GrayImage() = default;
    GrayImage(std::uint32_t w, std::uint32_t h, std::uint8_t fill = 0)
        : width(w), height(h), pixels(std::size_t(w) * h, fill) {}

    std::size_t size() const { return pixels.size(); }

    std::uint8_t at(std::uint32_t x, std::uint32_t y) const {
        return pixels[std::size_t(y) * width + x];
    }
    std::uint8_t& at(std::uint32_t x, std::uint32_t y) {
        return pixels[std::size_t(y) * width + x];
    }

    bool operator==(const GrayImage& o) const = default;
};

// Round each dimension up to the next multiple of 32; new pixels are 0,
// original pixels keep their (x, y) positions. Idempotent on aligned images.
GrayImage pad_image(const GrayImage& img);

// Top-left crop; requires w <= img.width, h <= img.height.
GrayImage crop_image(const GrayImage& img, std::uint32_t w, std::uint32_t h);

}  // namespace face
