#include "face/image_io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#if defined(FACE_HAVE_PNG)
#include <png.h>
#endif

namespace face {

namespace {

class PgmScanner {
public:
    explicit PgmScanner(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

    // Next whitespace-delimited token, skipping '#' comments to end-of-line.
    std::string token() {
        for (;;) {
            while (pos_ < bytes_.size() && is_space(bytes_[pos_])) ++pos_;
            if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
                continue;
            }
            break;
        }
        std::string tok;
        while (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
            tok.push_back(char(bytes_[pos_]));
            ++pos_;
        }
        if (tok.empty()) throw std::runtime_error("invalid PGM: truncated header");
        return tok;
    }

    std::uint32_t number() {
        const std::string tok = token();
        std::uint64_t v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw std::runtime_error("invalid PGM: bad number");
            v = v * 10 + std::uint64_t(ch - '0');
            if (v > 0xFFFFFFFFull) throw std::runtime_error("invalid PGM: number too large");
        }
        return std::uint32_t(v);
    }

    // Position of the raster: exactly one whitespace byte after the maxval.
    std::size_t raster_start() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
            throw std::runtime_error("invalid PGM: missing raster separator");
        }
        return pos_ + 1;
    }

private:
    static bool is_space(std::uint8_t c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
    }

    const std::vector<std::uint8_t>& bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    char header[64];
    const int len = std::snprintf(header, sizeof header, "P5\n%u %u\n255\n", img.width, img.height);
    std::vector<std::uint8_t> out(header, header + len);
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

GrayImage parse_pgm(const std::vector<std::uint8_t>& bytes) {
    PgmScanner sc(bytes);
    const std::string magic = sc.token();
    if (magic != "P5") throw std::runtime_error("unsupported image format");
    GrayImage img;
    img.width = sc.number();
    img.height = sc.number();
    const std::uint32_t maxval = sc.number();
    if (img.width == 0 || img.height == 0) throw std::runtime_error("invalid PGM: zero dimension");
    if (maxval != 255) throw std::runtime_error("invalid PGM: only maxval 255 supported");
    const std::size_t start = sc.raster_start();
    const std::size_t need = std::size_t(img.width) * img.height;
    if (bytes.size() - start < need) throw std::runtime_error("invalid PGM: truncated raster");
    img.pixels.assign(bytes.begin() + start, bytes.begin() + start + need);
    return img;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (f.bad()) throw std::runtime_error("cannot read file: " + path);
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open file for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
    if (!f) throw std::runtime_error("cannot write file: " + path);
}

namespace {

const std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};

#if defined(FACE_HAVE_PNG)

GrayImage load_png(const std::string& path) {
    png_image pi;
    std::memset(&pi, 0, sizeof pi);
    pi.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&pi, path.c_str())) {
        throw std::runtime_error("invalid PNG: " + std::string(pi.message));
    }
    pi.format = PNG_FORMAT_GRAY;
    GrayImage img(pi.width, pi.height);
    if (!png_image_finish_read(&pi, nullptr, img.pixels.data(), 0, nullptr)) {
        throw std::runtime_error("invalid PNG: " + std::string(pi.message));
    }
    return img;
}

void save_png(const std::string& path, const GrayImage& img) {
    png_image pi;
    std::memset(&pi, 0, sizeof pi);
    pi.version = PNG_IMAGE_VERSION;
    pi.width = img.width;
    pi.height = img.height;
    pi.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&pi, path.c_str(), 0, img.pixels.data(), 0, nullptr)) {
        throw std::runtime_error("cannot write PNG: " + std::string(pi.message));
    }
}

#endif  // FACE_HAVE_PNG

}  // namespace

bool png_supported() {
#if defined(FACE_HAVE_PNG)
    return true;
#else
    return false;
#endif
}

GrayImage load_image(const std::string& path) {
    const std::vector<std::uint8_t> bytes = read_file(path);
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0) {
#if defined(FACE_HAVE_PNG)
        return load_png(path);
#else
        throw std::runtime_error("unsupported image format");
#endif
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return parse_pgm(bytes);
    throw std::runtime_error("unsupported image format");
}

void save_image(const std::string& path, const GrayImage& img, ImageFormat format) {
    if (format == ImageFormat::pgm) {
        write_file(path, write_pgm(img));
        return;
    }
#if defined(FACE_HAVE_PNG)
    save_png(path, img);
#else
    throw std::runtime_error("PNG support not compiled in");
#endif
}

}  // namespace face
