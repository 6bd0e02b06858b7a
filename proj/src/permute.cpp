#include "face/permute.hpp"

#include <array>
#include <stdexcept>

namespace face {

namespace {

constexpr std::uint32_t kBlock = 32;
constexpr std::size_t kBlockBytes = std::size_t(kBlock) * kBlock;

void check_aligned(const GrayImage& img) {
    if (img.width == 0 || img.height == 0 || img.width % kBlock != 0 || img.height % kBlock != 0) {
        throw std::invalid_argument("unaligned image");
    }
}

GrayImage run(const GrayImage& img, ChaoticParams params, bool inverse) {
    check_aligned(img);
    GrayImage out(img.width, img.height);
    std::array<std::uint8_t, kBlockBytes> flat{}, shuffled{};

    for (std::uint32_t by = 0; by < img.height / kBlock; ++by) {
        for (std::uint32_t bx = 0; bx < img.width / kBlock; ++bx) {
            for (std::uint32_t row = 0; row < kBlock; ++row) {
                const std::size_t src = (std::size_t(by) * kBlock + row) * img.width +
                                        std::size_t(bx) * kBlock;
                for (std::uint32_t col = 0; col < kBlock; ++col) {
                    flat[row * kBlock + col] = img.pixels[src + col];
                }
            }
            const std::vector<std::uint32_t> pi = permutation_sequence(params, kBlockBytes);
            const std::uint8_t* hashed = nullptr;
            if (!inverse) {
                for (std::size_t j = 0; j < kBlockBytes; ++j) shuffled[j] = flat[pi[j]];
                hashed = shuffled.data();
            } else {
                for (std::size_t j = 0; j < kBlockBytes; ++j) shuffled[pi[j]] = flat[j];
                hashed = flat.data();  // the permuted bytes are the input here
            }
            for (std::uint32_t row = 0; row < kBlock; ++row) {
                const std::size_t dst = (std::size_t(by) * kBlock + row) * img.width +
                                        std::size_t(bx) * kBlock;
                for (std::uint32_t col = 0; col < kBlock; ++col) {
                    out.pixels[dst + col] = shuffled[row * kBlock + col];
                }
            }
            params = hash_to_params(sha256(hashed, kBlockBytes));
        }
    }
    return out;
}

}  // namespace

GrayImage permute_image(const GrayImage& img, ChaoticParams init) {
    return run(img, init, false);
}

GrayImage inverse_permute(const GrayImage& img, ChaoticParams init) {
    return run(img, init, true);
}

}  // namespace face
