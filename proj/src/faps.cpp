#include "face/faps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace face {

GradientPair sobel_gradients(const GrayImage& img) {
    const std::uint32_t w = img.width, h = img.height;
    GradientPair g;
    g.width = w;
    g.height = h;
    g.gx.resize(std::size_t(w) * h);
    g.gy.resize(std::size_t(w) * h);

    auto sample = [&](std::int64_t x, std::int64_t y) -> std::int32_t {
        x = std::clamp<std::int64_t>(x, 0, std::int64_t(w) - 1);
        y = std::clamp<std::int64_t>(y, 0, std::int64_t(h) - 1);
        return img.pixels[std::size_t(y) * w + std::size_t(x)];
    };

    for (std::uint32_t y = 0; y < h; ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
            const std::int32_t p00 = sample(std::int64_t(x) - 1, std::int64_t(y) - 1);
            const std::int32_t p01 = sample(x, std::int64_t(y) - 1);
            const std::int32_t p02 = sample(std::int64_t(x) + 1, std::int64_t(y) - 1);
            const std::int32_t p10 = sample(std::int64_t(x) - 1, y);
            const std::int32_t p12 = sample(std::int64_t(x) + 1, y);
            const std::int32_t p20 = sample(std::int64_t(x) - 1, std::int64_t(y) + 1);
            const std::int32_t p21 = sample(x, std::int64_t(y) + 1);
            const std::int32_t p22 = sample(std::int64_t(x) + 1, std::int64_t(y) + 1);
            const std::size_t i = std::size_t(y) * w + x;
            g.gx[i] = -p00 + p02 - 2 * p10 + 2 * p12 - p20 + p22;
            g.gy[i] = p00 + 2 * p01 + p02 - p20 - 2 * p21 - p22;
        }
    }
    return g;
}

EdgeMap edge_map(const GradientPair& g) {
    EdgeMap em;
    em.width = g.width;
    em.height = g.height;
    em.e.resize(g.gx.size());
    double maxm = 0.0;
    for (std::size_t i = 0; i < g.gx.size(); ++i) {
        const std::int64_t gx = g.gx[i], gy = g.gy[i];
        const double m = std::sqrt(double(gx * gx + gy * gy));
        em.e[i] = m;
        if (m > maxm) maxm = m;
    }
    if (maxm > 0.0) {
        for (double& v : em.e) v /= maxm;
    } else {
        std::fill(em.e.begin(), em.e.end(), 0.0);
    }
    return em;
}

namespace {

inline int edge_bin(double v) {
    const int b = int(v * 256.0);
    return b > 255 ? 255 : b;
}

}  // namespace

double otsu_threshold(const EdgeMap& e) {
    std::array<std::int64_t, 256> hist{};
    for (double v : e.e) ++hist[edge_bin(v)];

    int populated = 0;
    for (std::int64_t c : hist)
        if (c > 0) ++populated;
    if (populated <= 1) return 0.0;

    const std::int64_t n = std::int64_t(e.e.size());
    std::int64_t total = 0;
    for (int k = 0; k < 256; ++k) total += std::int64_t(k) * hist[k];

    double best = -1.0;
    int best_k = 0;
    std::int64_t w0 = 0, s0 = 0;
    for (int k = 0; k < 256; ++k) {
        w0 += hist[k];
        s0 += std::int64_t(k) * hist[k];
        const std::int64_t w1 = n - w0;
        const std::int64_t s1 = total - s0;
        double sigma = 0.0;
        if (w0 != 0 && w1 != 0) {
            const double mu0 = double(s0) / double(w0);
            const double mu1 = double(s1) / double(w1);
            const double d = mu0 - mu1;
            sigma = (double(w0) * double(w1)) * (d * d);
        }
        if (sigma > best) {
            best = sigma;
            best_k = k;
        }
    }
    return double(best_k + 1) / 256.0;
}

std::vector<bool> classify_pixels(const EdgeMap& e, double t) {
    std::vector<bool> he(e.e.size());
    for (std::size_t i = 0; i < e.e.size(); ++i) he[i] = e.e[i] > t;
    return he;
}

std::pair<GrayImage, FapsRecord> segment(const GrayImage& img) {
    const EdgeMap em = edge_map(sobel_gradients(img));
    const double t = otsu_threshold(em);
    const std::vector<bool> he = classify_pixels(em, t);

    std::vector<std::uint32_t> he_idx, le_idx;
    he_idx.reserve(img.size());
    le_idx.reserve(img.size());
    for (std::uint32_t i = 0; i < img.size(); ++i) {
        (he[i] ? he_idx : le_idx).push_back(i);
    }
    const auto& px = img.pixels;
    // Stability over the ascending-index fill gives the index tie-break.
    std::stable_sort(he_idx.begin(), he_idx.end(),
                     [&px](std::uint32_t a, std::uint32_t b) { return px[a] > px[b]; });
    std::stable_sort(le_idx.begin(), le_idx.end(),
                     [&px](std::uint32_t a, std::uint32_t b) { return px[a] < px[b]; });

    FapsRecord rec;
    rec.threshold = t;
    rec.index_map.reserve(img.size());
    rec.index_map.insert(rec.index_map.end(), he_idx.begin(), he_idx.end());
    rec.index_map.insert(rec.index_map.end(), le_idx.begin(), le_idx.end());

    GrayImage out(img.width, img.height);
    for (std::size_t p = 0; p < rec.index_map.size(); ++p) {
        out.pixels[p] = px[rec.index_map[p]];
    }
    return {std::move(out), std::move(rec)};
}

GrayImage unsegment(const GrayImage& seg, const FapsRecord& rec) {
    const std::size_t n = seg.size();
    if (rec.index_map.size() != n) throw std::invalid_argument("invalid FAPS record");
    std::vector<bool> seen(n, false);
    for (std::uint32_t idx : rec.index_map) {
        if (idx >= n || seen[idx]) throw std::invalid_argument("invalid FAPS record");
        seen[idx] = true;
    }
    GrayImage out(seg.width, seg.height);
    for (std::size_t p = 0; p < n; ++p) {
        out.pixels[rec.index_map[p]] = seg.pixels[p];
    }
    return out;
}

}  // namespace face
