#include "face/confuse.hpp"

#include <array>
#include <stdexcept>

namespace face {

namespace {

constexpr std::uint32_t kBlock = 16;
constexpr std::size_t kBlockBytes = std::size_t(kBlock) * kBlock;

void check_aligned(const GrayImage& img) {
    if (img.width == 0 || img.height == 0 || img.width % kBlock != 0 || img.height % kBlock != 0) {
        throw std::invalid_argument("unaligned image");
    }
}

GrayImage run(const GrayImage& img, ChaoticParams params, bool inverse) {
    check_aligned(img);
    GrayImage out(img.width, img.height);
    std::array<std::uint8_t, kBlockBytes> in{}, xored{};

    for (std::uint32_t by = 0; by < img.height / kBlock; ++by) {
        for (std::uint32_t bx = 0; bx < img.width / kBlock; ++bx) {
            for (std::uint32_t row = 0; row < kBlock; ++row) {
                const std::size_t src = (std::size_t(by) * kBlock + row) * img.width +
                                        std::size_t(bx) * kBlock;
                for (std::uint32_t col = 0; col < kBlock; ++col) {
                    in[row * kBlock + col] = img.pixels[src + col];
                }
            }
            const std::array<std::uint8_t, 256> seed = seed_matrix(params);
            for (std::size_t j = 0; j < kBlockBytes; ++j) xored[j] = in[j] ^ seed[j];
            // The chain re-keys from the confused block: that is `xored` when
            // encrypting and the input block when decrypting.
            const std::uint8_t* confused = inverse ? in.data() : xored.data();
            for (std::uint32_t row = 0; row < kBlock; ++row) {
                const std::size_t dst = (std::size_t(by) * kBlock + row) * img.width +
                                        std::size_t(bx) * kBlock;
                for (std::uint32_t col = 0; col < kBlock; ++col) {
                    out.pixels[dst + col] = xored[row * kBlock + col];
                }
            }
            params = hash_to_params(sha256(confused, kBlockBytes));
        }
    }
    return out;
}

}  // namespace

GrayImage confuse_image(const GrayImage& img, ChaoticParams init) {
    return run(img, init, false);
}

GrayImage deconfuse_image(const GrayImage& img, ChaoticParams init) {
    return run(img, init, true);
}

}  // namespace face
