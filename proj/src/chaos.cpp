#include "face/chaos.hpp"

#include <algorithm>
#include <numeric>

namespace face {

ChaoticParams logistic_step(ChaoticParams p) {
    double x = (p.r * p.x) * (1.0 - p.x);
    if (x <= 0.0) {
        x = kChaosMin;
    } else if (x >= 1.0) {
        x = kChaosMax;
    }
    return {x, p.r};
}

unsigned digest_mod100(const Digest& h) {
    unsigned acc = 0;
    for (std::uint8_t b : h) acc = (acc * 256u + b) % 100u;
    return acc;
}

ChaoticParams hash_to_params(const Digest& h) {
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u = (u << 8) | h[i];
    double x = double(u) * 0x1p-64;
    if (x < kChaosMin) x = kChaosMin;
    if (x > kChaosMax) x = kChaosMax;
    const unsigned m = digest_mod100(h);
    const double r = 3.9 + 0.1 * (double(m) / 100.0);
    return {x, r};
}

std::vector<double> chaotic_sequence(ChaoticParams p, std::size_t n) {
    for (int i = 0; i < 100; ++i) p = logistic_step(p);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        p = logistic_step(p);
        out[i] = p.x;
    }
    return out;
}

std::vector<std::uint32_t> stable_argsort(const std::vector<double>& values) {
    std::vector<std::uint32_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&values](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
    return idx;
}

std::vector<std::uint32_t> permutation_sequence(ChaoticParams p, std::size_t n) {
    return stable_argsort(chaotic_sequence(p, n));
}

std::vector<std::uint8_t> keystream(ChaoticParams p, std::size_t len) {
    std::vector<std::uint8_t> out(len);
    for (int i = 0; i < 100; ++i) p = logistic_step(p);
    for (std::size_t i = 0; i < len; ++i) {
        p = logistic_step(p);
        out[i] = std::uint8_t(std::uint64_t(p.x * 1.0e14) & 0xFF);
    }
    return out;
}

std::array<std::uint8_t, 256> seed_matrix(ChaoticParams p) {
    const std::vector<std::uint8_t> ks = keystream(p, 256);
    std::array<std::uint8_t, 256> out{};
    std::copy(ks.begin(), ks.end(), out.begin());
    return out;
}

}  // namespace face
