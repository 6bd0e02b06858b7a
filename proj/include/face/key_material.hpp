#pragma once

#include <cstdint>
#include <vector>

#include "face/chaos.hpp"
#include "face/sha256.hpp"

namespace face {

// Per-key material: master digest plus domain-separated initial parameters
// for the three keyed stages.
struct KeyMaterial {
    Digest master{};
    ChaoticParams perm_init{};
    ChaoticParams conf_init{};
    ChaoticParams mask_init{};
};

// master = SHA-256(key); each stage seed is hash_to_params(SHA-256(master ||
// tag)) with ASCII tags "perm", "conf", "faps". Throws std::invalid_argument
// "empty key" on an empty key.
KeyMaterial derive_key_material(const std::vector<std::uint8_t>& key_bytes);

}  // namespace face
