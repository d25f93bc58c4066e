#pragma once

// Word-level inner loops shared by the sharing/circuit layers: bulk XOR/AND,
// the fused AND cross-term of the replicated multiplication protocol, and the
// reduced-round SPN used as keystream generator and keyed matching PRF.
// A scalar reference implementation is always available; an AVX2 variant is
// selected at runtime when the CPU supports it. Both must agree bit-exactly.

#include "triq/common.h"

namespace triq::kern {

// SPN round constants (odd, from the golden-ratio sequence). One 64-bit
// block, two key words, `rounds` iterations of key-mix / shift-chi / rotate.
// Explicitly a stand-in for a real PRF, not production crypto.
inline constexpr int kSpnDefaultRounds = 24;
inline constexpr int kSpnRot = 29;

inline constexpr u64 spn_rc(int r) {
    return 0x9E3779B97F4A7C15ULL * u64(2 * r + 1);
}

struct Ops {
    const char* name;
    void (*xor_words)(u64* dst, const u64* x, const u64* y, std::size_t n);
    void (*and_words)(u64* dst, const u64* x, const u64* y, std::size_t n);
    // dst = (a0&b0) ^ (a0&b1) ^ (a1&b0): the local share of an AND gate.
    void (*and_cross)(u64* dst, const u64* a0, const u64* a1,
                      const u64* b0, const u64* b1, std::size_t n);
    // dst[i] = SPN_k(x[i])
    void (*spn_enc)(u64* dst, const u64* x, std::size_t n, u64 k0, u64 k1, int rounds);
    // dst[i] = SPN_k(ctr0 + i): counter-mode keystream.
    void (*spn_ctr)(u64* dst, std::size_t n, u64 k0, u64 k1, u64 ctr0, int rounds);
};

const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported
const Ops& ops();       // runtime-selected best

inline u64 spn_enc_one(u64 x, u64 k0, u64 k1, int rounds = kSpnDefaultRounds) {
    for (int r = 0; r < rounds; ++r) {
        x ^= (r & 1 ? k1 : k0) ^ spn_rc(r);
        x ^= (x << 1) & (x << 2);
        x = rotl64(x, kSpnRot);
    }
    return x ^ k0;
}

}  // namespace triq::kern
