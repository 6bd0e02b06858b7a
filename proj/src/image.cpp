#include "face/image.hpp"

#include <cstring>
#include <stdexcept>

namespace face {

namespace {

std::uint32_t round_up_32(std::uint32_t v) {
    return (v + 31u) / 32u * 32u;
}

}  // namespace

GrayImage pad_image(const GrayImage& img) {
    const std::uint32_t pw = round_up_32(img.width);
    const std::uint32_t ph = round_up_32(img.height);
    if (pw == img.width && ph == img.height) return img;
    GrayImage out(pw, ph, 0);
    for (std::uint32_t y = 0; y < img.height; ++y) {
        std::memcpy(&out.pixels[std::size_t(y) * pw],
                    &img.pixels[std::size_t(y) * img.width], img.width);
    }
    return out;
}

GrayImage crop_image(const GrayImage& img, std::uint32_t w, std::uint32_t h) {
    if (w > img.width || h > img.height) throw std::invalid_argument("crop larger than image");
    if (w == img.width && h == img.height) return img;
    GrayImage out(w, h);
    for (std::uint32_t y = 0; y < h; ++y) {
        std::memcpy(&out.pixels[std::size_t(y) * w],
                    &img.pixels[std::size_t(y) * img.width], w);
    }
    return out;
}

}  // namespace face
