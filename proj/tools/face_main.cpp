// face — command-line front end: encrypt/decrypt grayscale images to/from
// the FACE container format, report statistical metrics, and run the
// one-bit differential experiment.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "face/analysis.hpp"
#include "face/container.hpp"
#include "face/image_io.hpp"
#include "face/pipeline.hpp"

namespace {

struct KeyOpts {
    std::string hex;
    std::string passphrase;
};

void add_key_options(CLI::App* cmd, KeyOpts& k) {
    auto* h = cmd->add_option("--key-hex", k.hex, "64-hex-character key (32 bytes)");
    auto* p = cmd->add_option("--passphrase", k.passphrase, "arbitrary passphrase key");
    h->excludes(p);
    p->excludes(h);
}

std::vector<std::uint8_t> resolve_key(const KeyOpts& k) {
    if (!k.hex.empty()) {
        if (k.hex.size() != 64) throw std::runtime_error("--key-hex must be 64 hex characters");
        std::vector<std::uint8_t> out(32);
        for (std::size_t i = 0; i < 32; ++i) {
            auto nibble = [](char c) -> int {
                if (c >= '0' && c <= '9') return c - '0';
                if (c >= 'a' && c <= 'f') return c - 'a' + 10;
                if (c >= 'A' && c <= 'F') return c - 'A' + 10;
                throw std::runtime_error("--key-hex must be 64 hex characters");
            };
            out[i] = std::uint8_t(nibble(k.hex[2 * i]) << 4 | nibble(k.hex[2 * i + 1]));
        }
        return out;
    }
    if (!k.passphrase.empty()) {
        return std::vector<std::uint8_t>(k.passphrase.begin(), k.passphrase.end());
    }
    throw std::runtime_error("a key is required: pass --key-hex or --passphrase");
}

void ensure_writable(const std::string& path, bool force) {
    if (!force && std::filesystem::exists(path)) {
        throw std::runtime_error("refusing to overwrite " + path + " (use --force)");
    }
}

face::ImageFormat output_format(const std::string& flag, const std::string& path) {
    std::string f = flag;
    if (f.empty()) {
        const auto ext = std::filesystem::path(path).extension().string();
        f = ext == ".png" ? "png" : "pgm";
    }
    if (f == "pgm") return face::ImageFormat::pgm;
    if (f == "png") {
        if (!face::png_supported()) throw std::runtime_error("PNG support not compiled in");
        return face::ImageFormat::png;
    }
    throw std::runtime_error("--format must be pgm or png");
}

struct FlipSpec {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    unsigned bit = 0;
};

FlipSpec parse_flip(const std::string& s) {
    FlipSpec f;
    unsigned long long row = 0, col = 0, bit = 0;
    char extra = 0;
    const int n3 = std::sscanf(s.c_str(), "%llu,%llu,%llu%c", &row, &col, &bit, &extra);
    if (n3 == 3) {
        f.row = std::uint32_t(row), f.col = std::uint32_t(col), f.bit = unsigned(bit);
        return f;
    }
    const int n2 = std::sscanf(s.c_str(), "%llu,%llu%c", &row, &col, &extra);
    if (n2 == 2) {
        f.row = std::uint32_t(row), f.col = std::uint32_t(col);
        return f;
    }
    throw std::runtime_error("--flip expects R,C or R,C,bit");
}

// ---------------------------------------------------------------------------

int cmd_encrypt(const std::string& in, const std::string& out, const KeyOpts& k, bool force) {
    const auto key = resolve_key(k);
    ensure_writable(out, force);
    const face::GrayImage img = face::load_image(in);
    face::write_file(out, face::encrypt_to_bytes(img, key));
    std::printf("encrypted %s (%ux%u) -> %s\n", in.c_str(), img.width, img.height, out.c_str());
    return 0;
}

int cmd_decrypt(const std::string& in, const std::string& out, const KeyOpts& k, bool force,
                const std::string& format) {
    const auto key = resolve_key(k);
    const face::ImageFormat fmt = output_format(format, out);
    ensure_writable(out, force);
    const face::GrayImage img = face::decrypt_from_bytes(face::read_file(in), key);
    face::save_image(out, img, fmt);
    std::printf("decrypted %s -> %s (%ux%u)\n", in.c_str(), out.c_str(), img.width, img.height);
    return 0;
}

void print_metrics(const std::string& path, const char* kind, const face::GrayImage& img,
                   bool kv) {
    const double entropy = face::shannon_entropy(img);
    const face::CorrelationReport corr = face::correlation_report(img);
    const double chi = face::chi_square_uniformity(img);
    if (kv) {
        std::printf("file=%s\n", path.c_str());
        std::printf("kind=%s\n", kind);
        std::printf("width=%u\nheight=%u\n", img.width, img.height);
        std::printf("entropy=%.17g\n", entropy);
        std::printf("corr_horizontal=%.17g\n", corr.horizontal);
        std::printf("corr_vertical=%.17g\n", corr.vertical);
        std::printf("corr_diagonal=%.17g\n", corr.diagonal);
        std::printf("corr_mean_abs=%.17g\n", corr.mean_abs);
        std::printf("chi_square=%.17g\n", chi);
        std::printf("\n");
    } else {
        std::printf("%s: %s %ux%u\n", path.c_str(), kind, img.width, img.height);
        std::printf("  entropy          %9.6f\n", entropy);
        std::printf("  corr horizontal  %+9.6f\n", corr.horizontal);
        std::printf("  corr vertical    %+9.6f\n", corr.vertical);
        std::printf("  corr diagonal    %+9.6f\n", corr.diagonal);
        std::printf("  corr mean abs    %9.6f\n", corr.mean_abs);
        std::printf("  chi-square       %9.2f\n", chi);
    }
}

int cmd_analyze(const std::vector<std::string>& inputs, bool kv) {
    for (const std::string& path : inputs) {
        const auto bytes = face::read_file(path);
        if (face::looks_like_container(bytes)) {
            const face::CipherContainer c = face::deserialize_container(bytes);
            face::GrayImage cipher(c.padded_width, c.padded_height);
            cipher.pixels = c.cipher_pixels;
            print_metrics(path, "cipher", cipher, kv);
        } else {
            print_metrics(path, "plain", face::load_image(path), kv);
        }
    }
    return 0;
}

int cmd_difftest(const std::string& in, const KeyOpts& k, const std::string& flip,
                 const std::string& diff_out, bool force, const std::string& format, bool kv) {
    const auto key = resolve_key(k);
    const FlipSpec f = parse_flip(flip);
    const face::GrayImage img = face::load_image(in);
    if (!diff_out.empty()) ensure_writable(diff_out, force);

    const face::DifferentialReport rep = face::differential_test(img, key, f.row, f.col, f.bit);
    if (kv) {
        std::printf("file=%s\n", in.c_str());
        std::printf("flip_row=%u\nflip_col=%u\nflip_bit=%u\n", f.row, f.col, f.bit);
        std::printf("npcr_percent=%.17g\n", rep.npcr_percent);
        std::printf("uaci_percent=%.17g\n", rep.uaci_percent);
    } else {
        std::printf("%s: flipped bit %u of pixel (row %u, col %u)\n", in.c_str(), f.bit, f.row,
                    f.col);
        std::printf("  NPCR  %8.4f %%\n", rep.npcr_percent);
        std::printf("  UACI  %8.4f %%\n", rep.uaci_percent);
    }
    if (!diff_out.empty()) {
        face::save_image(diff_out, rep.diff_image, output_format(format, diff_out));
        if (!kv) std::printf("  difference image written to %s\n", diff_out.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"feature-aware chaotic grayscale image encryption"};
    app.require_subcommand(1);

    std::string in, out, format, flip = "0,0", diff_out, report = "text";
    std::vector<std::string> inputs;
    KeyOpts key;
    bool force = false;

    auto* enc = app.add_subcommand("encrypt", "encrypt an image into a .face container");
    enc->add_option("input", in, "input image (PGM or PNG)")->required();
    enc->add_option("output", out, "output container path (.face)")->required();
    add_key_options(enc, key);
    enc->add_flag("--force", force, "overwrite the output if it exists");

    auto* dec = app.add_subcommand("decrypt", "decrypt a container back to an image");
    dec->add_option("input", in, "input container (.face)")->required();
    dec->add_option("output", out, "output image path")->required();
    add_key_options(dec, key);
    dec->add_flag("--force", force, "overwrite the output if it exists");
    dec->add_option("--format", format, "output image format: pgm|png (default: by extension)");

    auto* ana = app.add_subcommand("analyze", "entropy/correlation/chi-square metrics");
    ana->add_option("inputs", inputs, "images or containers")->required()->expected(-1);
    ana->add_option("--report", report, "output mode: text|kv");

    auto* dif = app.add_subcommand("difftest", "one-bit plaintext difference experiment");
    dif->add_option("input", in, "input image (PGM or PNG)")->required();
    add_key_options(dif, key);
    dif->add_option("--flip", flip, "pixel to flip as R,C or R,C,bit (default 0,0,0)");
    dif->add_option("--diff-out", diff_out, "write the |c1-c2| image here");
    dif->add_flag("--force", force, "overwrite --diff-out if it exists");
    dif->add_option("--format", format, "difference image format: pgm|png");
    dif->add_option("--report", report, "output mode: text|kv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (report != "text" && report != "kv") {
            throw std::runtime_error("--report must be text or kv");
        }
        const bool kv = report == "kv";
        if (enc->parsed()) return cmd_encrypt(in, out, key, force);
        if (dec->parsed()) return cmd_decrypt(in, out, key, force, format);
        if (ana->parsed()) return cmd_analyze(inputs, kv);
        if (dif->parsed()) return cmd_difftest(in, key, flip, diff_out, force, format, kv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "face: %s\n", e.what());
        return 1;
    }
    return 0;
}
