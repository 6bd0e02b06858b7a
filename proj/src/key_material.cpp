#include "face/key_material.hpp"

#include <stdexcept>
#include <string_view>

namespace face {

namespace {

ChaoticParams stage_params(const Digest& master, std::string_view tag) {
    Sha256 h;
    h.update(master.data(), master.size());
    h.update(reinterpret_cast<const std::uint8_t*>(tag.data()), tag.size());
    return hash_to_params(h.finish());
}

}  // namespace

KeyMaterial derive_key_material(const std::vector<std::uint8_t>& key_bytes) {
    if (key_bytes.empty()) throw std::invalid_argument("empty key");
    KeyMaterial km;
    km.master = sha256(key_bytes);
    km.perm_init = stage_params(km.master, "perm");
    km.conf_init = stage_params(km.master, "conf");
    km.mask_init = stage_params(km.master, "faps");
    return km;
}

}  // namespace face
