#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "face/image.hpp"

namespace face {

enum class ImageFormat { pgm, png };

// Binary PGM (P5, maxval 255). parse throws std::runtime_error with a
// one-line reason on malformed input (wrong magic, maxval != 255, short
// raster, ...).
std::vector<std::uint8_t> write_pgm(const GrayImage& img);
GrayImage parse_pgm(const std::vector<std::uint8_t>& bytes);

// Whole-file helpers; throw std::runtime_error on I/O failure.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

// Loads a grayscale image, detecting PGM or PNG from the file contents.
// PNG support is compiled in when libpng is available; otherwise PNG input
// raises "unsupported image format".
GrayImage load_image(const std::string& path);
void save_image(const std::string& path, const GrayImage& img, ImageFormat format);

bool png_supported();

}  // namespace face
