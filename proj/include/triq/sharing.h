#pragma once

// (2,3) replicated XOR sharing over 64-bit ring values. The secret v is split
// into words w1 ^ w2 ^ w3 = v; party p in {1,2,3} holds the pair
// (w_p, w_{p+1}) (indices cyclic), so adjacent parties overlap in one word
// and any two parties reconstruct.

#include <array>
#include <cassert>

#include "triq/common.h"
#include "triq/prg.h"

namespace triq {

inline constexpr int kRingBits = 64;

inline int next_party(int p) { return p % 3 + 1; }
inline int prev_party(int p) { return (p + 1) % 3 + 1; }

struct ReplicatedShare {
    u64 first = 0;
    u64 second = 0;
    int party = 0;
};

// share(v; w1, w2): w3 = v ^ w1 ^ w2, distributed per the replicated layout.
inline std::array<ReplicatedShare, 3> share_value(u64 v, u64 w1, u64 w2) {
    u64 w[4] = {0, w1, w2, v ^ w1 ^ w2};
    std::array<ReplicatedShare, 3> out;
    for (int p = 1; p <= 3; ++p)
        out[p - 1] = ReplicatedShare{w[p], w[next_party(p)], p};
    return out;
}

inline u64 reconstruct(const ReplicatedShare& a, const ReplicatedShare& b) {
    if (a.party == b.party)
        throw ProtocolError("reconstruct: shares from the same party");
    // a.first = w_{pa}, a.second = w_{pa+1}; b covers the remaining word.
    if (next_party(a.party) == b.party)
        return a.first ^ a.second ^ b.second;
    return a.first ^ a.second ^ b.first;
}

// One party's view of a secret-shared vector of 64-bit values.
struct ShareVec {
    std::vector<u64> a;  // first word, w_p
    std::vector<u64> b;  // second word, w_{p+1}

    ShareVec() = default;
    explicit ShareVec(std::size_t n) : a(n, 0), b(n, 0) {}

    std::size_t size() const { return a.size(); }

    void resize(std::size_t n) {
        a.resize(n, 0);
        b.resize(n, 0);
    }

    // Sharing of a public constant: w1 = value, w2 = w3 = 0. Every party can
    // build it locally.
    static ShareVec constant(const std::vector<u64>& vals, int party) {
        ShareVec v(vals.size());
        if (party == 1) v.a = vals;
        if (party == 3) v.b = vals;
        return v;
    }

    static ShareVec constant(std::size_t n, u64 val, int party) {
        return constant(std::vector<u64>(n, val), party);
    }

    void append(const ShareVec& o) {
        a.insert(a.end(), o.a.begin(), o.a.end());
        b.insert(b.end(), o.b.begin(), o.b.end());
    }

    ShareVec slice(std::size_t off, std::size_t len) const {
        ShareVec v(len);
        std::copy(a.begin() + off, a.begin() + off + len, v.a.begin());
        std::copy(b.begin() + off, b.begin() + off + len, v.b.begin());
        return v;
    }

    // Wire/disk layout: per element, two little-endian words (first, second).
    std::vector<u8> serialize() const {
        std::vector<u8> out(size() * 16);
        for (std::size_t i = 0; i < size(); ++i) {
            for (int k = 0; k < 8; ++k) {
                out[16 * i + k] = u8(a[i] >> (8 * k));
                out[16 * i + 8 + k] = u8(b[i] >> (8 * k));
            }
        }
        return out;
    }

    static ShareVec deserialize(const std::vector<u8>& in) {
        if (in.size() % 16) throw InputError("share blob not a multiple of 16 bytes");
        ShareVec v(in.size() / 16);
        for (std::size_t i = 0; i < v.size(); ++i) {
            u64 x = 0, y = 0;
            for (int k = 7; k >= 0; --k) {
                x = (x << 8) | in[16 * i + k];
                y = (y << 8) | in[16 * i + 8 + k];
            }
            v.a[i] = x;
            v.b[i] = y;
        }
        return v;
    }
};

// Share a plaintext vector from the owner's randomness; result[p-1] is party
// p's view.
inline std::array<ShareVec, 3> share_vector(const std::vector<u64>& vals, Prg& prg) {
    std::size_t n = vals.size();
    std::vector<u64> w1(n), w2(n);
    prg.fill(w1.data(), n);
    prg.fill(w2.data(), n);
    std::array<ShareVec, 3> out{ShareVec(n), ShareVec(n), ShareVec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        u64 w3 = vals[i] ^ w1[i] ^ w2[i];
        out[0].a[i] = w1[i]; out[0].b[i] = w2[i];
        out[1].a[i] = w2[i]; out[1].b[i] = w3;
        out[2].a[i] = w3;    out[2].b[i] = w1[i];
    }
    return out;
}

inline std::vector<u64> reconstruct_vector(const ShareVec& p1, const ShareVec& p2) {
    assert(p1.size() == p2.size());
    std::vector<u64> out(p1.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = p1.a[i] ^ p1.b[i] ^ p2.b[i];
    return out;
}

// Correlated randomness: party p holds one PRG seed with each neighbour.
// Expanding both streams and XOR-combining per index yields fresh sharings of
// zero across the three parties with no communication.
struct SeedPair {
    Prg with_next;
    Prg with_prev;
};

class ZeroShareGen {
public:
    ZeroShareGen() = default;
    ZeroShareGen(Prg next, Prg prev) : next_(next), prev_(prev) {}

    void fill(u64* dst, std::size_t n) {
        tmp_.resize(n);
        next_.fill(dst, n);
        prev_.fill(tmp_.data(), n);
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= tmp_[i];
    }

    // First block of each pairwise stream, for the session handshake; equal
    // values on both ends of a channel certify seed agreement.
    u64 checksum_next() { return Prg(next_).next(); }
    u64 checksum_prev() { return Prg(prev_).next(); }

private:
    Prg next_, prev_;
    std::vector<u64> tmp_;
};

}  // namespace triq
