#pragma once

#include <algorithm>
#include <numeric>

#include "triq/common.h"
#include "triq/kernels.h"

namespace triq {

// Deterministic word stream: SPN in counter mode under a 128-bit seed.
class Prg {
public:
    Prg() : Prg(0, 0) {}
    Prg(u64 k0, u64 k1) : k0_(k0), k1_(k1), ctr_(0) {}

    void fill(u64* dst, std::size_t n) {
        kern::ops().spn_ctr(dst, n, k0_, k1_, ctr_, kern::kSpnDefaultRounds);
        ctr_ += n;
    }

    u64 next() {
        u64 v;
        fill(&v, 1);
        return v;
    }

    // Unbiased value in [0, bound) by rejection.
    u64 next_below(u64 bound) {
        if (bound <= 1) return 0;
        u64 lim = ~u64(0) - (~u64(0) % bound);
        for (;;) {
            u64 v = next();
            if (v < lim) return v % bound;
        }
    }

    // Fisher-Yates permutation of [0, n).
    std::vector<u32> permutation(std::size_t n) {
        std::vector<u32> p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t i = n; i > 1; --i)
            std::swap(p[i - 1], p[next_below(i)]);
        return p;
    }

    // Child stream with an independent counter space.
    Prg fork(u64 tag) const {
        return Prg(kern::spn_enc_one(tag, k0_, k1_), kern::spn_enc_one(~tag, k1_, k0_));
    }

    u64 counter() const { return ctr_; }

private:
    u64 k0_, k1_, ctr_;
};

}  // namespace triq
