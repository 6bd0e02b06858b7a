#include <doctest.h>

#include <stdexcept>

#include "face/container.hpp"
#include "testgen.hpp"

namespace {

face::CipherContainer sample(std::uint32_t ow, std::uint32_t oh, std::uint64_t seed) {
    const std::uint32_t pw = (ow + 31) / 32 * 32, ph = (oh + 31) / 32 * 32;
    face::CipherContainer c;
    c.orig_width = ow;
    c.orig_height = oh;
    c.padded_width = pw;
    c.padded_height = ph;
    testgen::SplitMix64 rng(seed);
    c.masked_faps.resize(std::size_t(4) * pw * ph);
    c.cipher_pixels.resize(std::size_t(pw) * ph);
    for (auto& b : c.masked_faps) b = std::uint8_t(rng.next());
    for (auto& b : c.cipher_pixels) b = std::uint8_t(rng.next());
    return c;
}

}  // namespace

TEST_CASE("serialize/deserialize round-trips randomized containers") {
    for (auto [ow, oh] : {std::pair<std::uint32_t, std::uint32_t>{1, 1},
                          {31, 33},
                          {32, 32},
                          {100, 60},
                          {250, 250}}) {
        const face::CipherContainer c = sample(ow, oh, ow * 1000 + oh);
        const auto bytes = face::serialize_container(c);
        CHECK(bytes.size() ==
              face::kContainerHeaderSize + 5 * std::size_t(c.padded_width) * c.padded_height);
        CHECK(face::deserialize_container(bytes) == c);
    }
}

TEST_CASE("serialized container starts with the magic and version") {
    const auto bytes = face::serialize_container(sample(10, 10, 1));
    REQUIRE(bytes.size() > 21);
    CHECK(bytes[0] == 'F');
    CHECK(bytes[1] == 'A');
    CHECK(bytes[2] == 'C');
    CHECK(bytes[3] == 'E');
    CHECK(bytes[4] == 1);
    CHECK(face::looks_like_container(bytes));
}

TEST_CASE("header field offsets are little-endian at fixed positions") {
    const face::CipherContainer c = sample(250, 250, 2);
    const auto bytes = face::serialize_container(c);
    // orig 250 = 0xFA, padded 256 = 0x100.
    CHECK(bytes[5] == 0xFA);
    CHECK(bytes[6] == 0x00);
    CHECK(bytes[9] == 0xFA);
    CHECK(bytes[13] == 0x00);
    CHECK(bytes[14] == 0x01);
    CHECK(bytes[17] == 0x00);
    CHECK(bytes[18] == 0x01);
}

TEST_CASE("parse failures are distinct") {
    auto bytes = face::serialize_container(sample(32, 32, 3));

    auto bad_magic = bytes;
    bad_magic[0] = 'G';
    CHECK_THROWS_WITH_AS(face::deserialize_container(bad_magic), "bad magic", std::runtime_error);

    auto bad_version = bytes;
    bad_version[4] = 0xFF;
    CHECK_THROWS_WITH_AS(face::deserialize_container(bad_version), "unsupported version",
                         std::runtime_error);

    auto truncated = bytes;
    truncated.resize(truncated.size() - 1);
    CHECK_THROWS_WITH_AS(face::deserialize_container(truncated), "truncated container",
                         std::runtime_error);

    CHECK_THROWS_WITH_AS(face::deserialize_container(std::vector<std::uint8_t>{'F', 'A', 'C'}),
                         "truncated container", std::runtime_error);

    auto bad_dims = bytes;
    bad_dims[13] = 33;  // padded width not a multiple of 32
    CHECK_THROWS_WITH_AS(face::deserialize_container(bad_dims), "invalid dimensions",
                         std::runtime_error);
}
