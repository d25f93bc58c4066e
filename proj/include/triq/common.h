#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace triq {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Protocol-level failure (channel loss, contract violation, divergence).
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed query, schema mismatch, unsupported shape.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline u64 rotl64(u64 x, int r) { return (x << r) | (x >> (64 - r)); }

inline u64 ceil_log2(u64 n) {
    u64 k = 0;
    while ((u64(1) << k) < n) ++k;
    return k;
}

// FNV-1a, used for plan hashing and for encoding string cells to ring values.
inline u64 fnv1a(const void* data, std::size_t len, u64 seed = 0xcbf29ce484222325ULL) {
    const u8* p = static_cast<const u8*>(data);
    u64 h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline u64 fnv1a(const std::string& s) { return fnv1a(s.data(), s.size()); }

}  // namespace triq
