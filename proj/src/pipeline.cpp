#include "face/pipeline.hpp"

#include <stdexcept>

#include "face/confuse.hpp"
#include "face/faps.hpp"
#include "face/permute.hpp"

namespace face {

namespace {

void check_image(const GrayImage& img) {
    if (img.width == 0 || img.height == 0 ||
        img.pixels.size() != std::size_t(img.width) * img.height) {
        throw std::invalid_argument("empty or inconsistent image");
    }
}

}  // namespace

CipherContainer encrypt(const GrayImage& img, const std::vector<std::uint8_t>& key_bytes) {
    check_image(img);
    const KeyMaterial km = derive_key_material(key_bytes);
    const GrayImage padded = pad_image(img);

    auto [seg, rec] = segment(padded);
    const GrayImage permuted = permute_image(seg, km.perm_init);
    GrayImage confused = confuse_image(permuted, km.conf_init);

    const std::size_t n = rec.index_map.size();
    std::vector<std::uint8_t> masked(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = rec.index_map[i];
        masked[4 * i] = std::uint8_t(v);
        masked[4 * i + 1] = std::uint8_t(v >> 8);
        masked[4 * i + 2] = std::uint8_t(v >> 16);
        masked[4 * i + 3] = std::uint8_t(v >> 24);
    }
    const std::vector<std::uint8_t> ks = keystream(km.mask_init, masked.size());
    for (std::size_t i = 0; i < masked.size(); ++i) masked[i] ^= ks[i];

    CipherContainer c;
    c.orig_width = img.width;
    c.orig_height = img.height;
    c.padded_width = padded.width;
    c.padded_height = padded.height;
    c.masked_faps = std::move(masked);
    c.cipher_pixels = std::move(confused.pixels);
    return c;
}

GrayImage decrypt(const CipherContainer& c, const std::vector<std::uint8_t>& key_bytes) {
    const KeyMaterial km = derive_key_material(key_bytes);
    const std::size_t area = std::size_t(c.padded_width) * c.padded_height;
    if (c.cipher_pixels.size() != area || c.masked_faps.size() != 4 * area) {
        throw std::runtime_error("invalid dimensions");
    }

    GrayImage cipher(c.padded_width, c.padded_height);
    cipher.pixels = c.cipher_pixels;

    const GrayImage deconfused = deconfuse_image(cipher, km.conf_init);
    const GrayImage unpermuted = inverse_permute(deconfused, km.perm_init);

    const std::vector<std::uint8_t> ks = keystream(km.mask_init, c.masked_faps.size());
    FapsRecord rec;
    rec.index_map.resize(area);
    std::vector<bool> seen(area, false);
    for (std::size_t i = 0; i < area; ++i) {
        const std::uint32_t v =
            std::uint32_t(c.masked_faps[4 * i] ^ ks[4 * i]) |
            (std::uint32_t(c.masked_faps[4 * i + 1] ^ ks[4 * i + 1]) << 8) |
            (std::uint32_t(c.masked_faps[4 * i + 2] ^ ks[4 * i + 2]) << 16) |
            (std::uint32_t(c.masked_faps[4 * i + 3] ^ ks[4 * i + 3]) << 24);
        if (v >= area || seen[v]) throw std::runtime_error("wrong key or corrupted container");
        seen[v] = true;
        rec.index_map[i] = v;
    }

    const GrayImage padded = unsegment(unpermuted, rec);
    return crop_image(padded, c.orig_width, c.orig_height);
}

std::vector<std::uint8_t> encrypt_to_bytes(const GrayImage& img,
                                           const std::vector<std::uint8_t>& key_bytes) {
    return serialize_container(encrypt(img, key_bytes));
}

GrayImage decrypt_from_bytes(const std::vector<std::uint8_t>& blob,
                             const std::vector<std::uint8_t>& key_bytes) {
    return decrypt(deserialize_container(blob), key_bytes);
}

}  // namespace face
