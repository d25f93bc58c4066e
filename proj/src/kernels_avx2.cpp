// Compiled with -mavx2; only reached through the runtime dispatch in
// kernels.cpp after a cpu-support check.

#include "triq/kernels.h"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace triq::kern {
namespace {

void xor_words_avx2(u64* dst, const u64* x, const u64* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i) dst[i] = x[i] ^ y[i];
}

void and_words_avx2(u64* dst, const u64* x, const u64* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
    }
    for (; i < n; ++i) dst[i] = x[i] & y[i];
}

void and_cross_avx2(u64* dst, const u64* a0, const u64* a1,
                    const u64* b0, const u64* b1, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a0 + i));
        __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a1 + i));
        __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b0 + i));
        __m256i y1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b1 + i));
        __m256i t = _mm256_xor_si256(
            _mm256_and_si256(x0, y0),
            _mm256_xor_si256(_mm256_and_si256(x0, y1), _mm256_and_si256(x1, y0)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i)
        dst[i] = (a0[i] & b0[i]) ^ (a0[i] & b1[i]) ^ (a1[i] & b0[i]);
}

inline __m256i rotl_epi64(__m256i v, int r) {
    return _mm256_or_si256(_mm256_slli_epi64(v, r), _mm256_srli_epi64(v, 64 - r));
}

inline __m256i spn_block(__m256i x, u64 k0, u64 k1, int rounds) {
    const __m256i vk0 = _mm256_set1_epi64x(static_cast<long long>(k0));
    const __m256i vk1 = _mm256_set1_epi64x(static_cast<long long>(k1));
    for (int r = 0; r < rounds; ++r) {
        __m256i rk = _mm256_xor_si256(r & 1 ? vk1 : vk0,
                                      _mm256_set1_epi64x(static_cast<long long>(spn_rc(r))));
        x = _mm256_xor_si256(x, rk);
        x = _mm256_xor_si256(
            x, _mm256_and_si256(_mm256_slli_epi64(x, 1), _mm256_slli_epi64(x, 2)));
        x = rotl_epi64(x, kSpnRot);
    }
    return _mm256_xor_si256(x, vk0);
}

void spn_enc_avx2(u64* dst, const u64* x, std::size_t n, u64 k0, u64 k1, int rounds) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), spn_block(v, k0, k1, rounds));
    }
    for (; i < n; ++i) dst[i] = spn_enc_one(x[i], k0, k1, rounds);
}

void spn_ctr_avx2(u64* dst, std::size_t n, u64 k0, u64 k1, u64 ctr0, int rounds) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_set_epi64x(static_cast<long long>(ctr0 + i + 3),
                                      static_cast<long long>(ctr0 + i + 2),
                                      static_cast<long long>(ctr0 + i + 1),
                                      static_cast<long long>(ctr0 + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), spn_block(v, k0, k1, rounds));
    }
    for (; i < n; ++i) dst[i] = spn_enc_one(ctr0 + i, k0, k1, rounds);
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops ops{"avx2",         xor_words_avx2, and_words_avx2,
                         and_cross_avx2, spn_enc_avx2,   spn_ctr_avx2};
    return &ops;
}

}  // namespace triq::kern

#else

namespace triq::kern {
const Ops* avx2_ops() { return nullptr; }
}  // namespace triq::kern

#endif
