#include "triq/kernels.h"

namespace triq::kern {
namespace {

void xor_words_scalar(u64* dst, const u64* x, const u64* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] ^ y[i];
}

void and_words_scalar(u64* dst, const u64* x, const u64* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] & y[i];
}

void and_cross_scalar(u64* dst, const u64* a0, const u64* a1,
                      const u64* b0, const u64* b1, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = (a0[i] & b0[i]) ^ (a0[i] & b1[i]) ^ (a1[i] & b0[i]);
}

void spn_enc_scalar(u64* dst, const u64* x, std::size_t n, u64 k0, u64 k1, int rounds) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = spn_enc_one(x[i], k0, k1, rounds);
}

void spn_ctr_scalar(u64* dst, std::size_t n, u64 k0, u64 k1, u64 ctr0, int rounds) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = spn_enc_one(ctr0 + i, k0, k1, rounds);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar",       xor_words_scalar, and_words_scalar,
                         and_cross_scalar, spn_enc_scalar,  spn_ctr_scalar};
    return ops;
}

}  // namespace triq::kern
