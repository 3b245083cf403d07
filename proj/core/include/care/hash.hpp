#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace care {

struct ModelRequest;

// SHA-256, lowercase hex.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& data);

// First 8 bytes of SHA-256(key), little-endian, as a u64. Used to derive
// independent RNG stream seeds from structured keys.
std::uint64_t sha256_seed(const std::string& key);

// Cache/replay key over role + rendered prompt + image bytes + sampling
// params + tags. Every field is length-prefixed so no two distinct requests
// can serialize to the same byte stream. Throws TemplateError if the prompt
// still contains an unresolved template placeholder.
std::string canonical_hash(const ModelRequest& request);

}  // namespace care
