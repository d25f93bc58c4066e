#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "triq/channel.h"
#include "triq/meter.h"
#include "triq/sharing.h"

namespace triq {

enum class Backend { Mpc, Dealer };

// Public session parameters; all three parties must load byte-identical
// config. kappa/sigma are recorded per the execution parameters; sigma has
// no attached semantics here.
struct SessionConfig {
    u64 master_seed = 1;
    u64 hash_seed = 1;
    Backend backend = Backend::Mpc;
    int spn_rounds = kern::kSpnDefaultRounds;
    u32 kappa = 128;
    u32 sigma = 40;
    std::array<std::string, 3> host{"127.0.0.1", "127.0.0.1", "127.0.0.1"};
    std::array<int, 3> port{9451, 9452, 9453};

    static SessionConfig parse(const std::string& text);
    static SessionConfig load(const std::string& path);
    std::string serialize() const;
};

struct Outgoing {
    int dest;  // party index 1..3; must be a neighbour
    std::vector<u8> bytes;
};

// One party's execution context: identity, links, meter, correlated
// randomness, and the shared PRF key for the matching backend.
class Party {
public:
    Party(int idx, const SessionConfig& cfg, std::unique_ptr<Link> to_next,
          std::unique_ptr<Link> to_prev);

    int idx() const { return idx_; }
    const SessionConfig& config() const { return cfg_; }
    Backend backend() const { return cfg_.backend; }

    // --- round-structured communication -----------------------------------
    // Send the given messages, then receive `expect_next` frames from the next
    // party and `expect_prev` from the previous one. Counts as one logical
    // round unless nothing is sent or received.
    std::pair<std::vector<std::vector<u8>>, std::vector<std::vector<u8>>> exchange(
        std::vector<Outgoing> out, int expect_next, int expect_prev);

    std::vector<u8> rotate_prev(std::vector<u8> to_prev);  // recv from next
    std::vector<u8> rotate_next(std::vector<u8> to_next);  // recv from prev
    void send_only(int dest, std::vector<u8> bytes);
    std::vector<u8> recv_only(int src);

    // --- share-level helpers ----------------------------------------------
    // Replicated AND of word vectors: local cross terms + zero-share mask, one
    // word to the previous party, one round.
    ShareVec and_words(const ShareVec& x, const ShareVec& y);
    // Batched variant: all pairs in one round.
    std::vector<ShareVec> and_words_batch(
        const std::vector<std::pair<const ShareVec*, const ShareVec*>>& pairs);

    // Reveal to all parties (each sends its second word to prev), one round.
    std::vector<u64> open(const ShareVec& x);
    // Reveal to party `dst` only.
    std::optional<std::vector<u64>> open_to(const ShareVec& x, int dst);
    // Fresh resharing of plaintext known to party `src`.
    ShareVec share_from(const std::vector<u64>* vals, int src, std::size_t n);

    void finish() { meter_.finish(); }
    Meter& meter() { return meter_; }
    const Transcript& transcript() const { return meter_.transcript(); }

    Prg& prg_next() { return prg_next_; }
    Prg& prg_prev() { return prg_prev_; }
    Prg& prg_own() { return prg_own_; }
    ZeroShareGen& zeros() { return zeros_; }

    // Shared PRF key for the matching step: two 64-bit words in replicated
    // sharing, derived from the pairwise seeds (no party knows the full key).
    u64 prf_key_first(int word) const { return prf_first_[word]; }
    u64 prf_key_second(int word) const { return prf_second_[word]; }
    u64 next_match_tweak() { return ++match_ctr_; }

    // Verifies pairwise PRG streams agree with both neighbours.
    void handshake();

private:
    int idx_;
    SessionConfig cfg_;
    std::unique_ptr<Link> next_, prev_;
    Meter meter_;
    u32 round_ = 0;
    Prg prg_next_, prg_prev_, prg_own_;
    ZeroShareGen zeros_;
    u64 prf_first_[2], prf_second_[2];
    u64 match_ctr_ = 0;
    std::vector<u64> zbuf_;
};

struct PartySet {
    std::array<std::unique_ptr<Party>, 3> p;
};

// Builds three in-process parties wired through a hub (hub must outlive them).
PartySet make_inproc_parties(const SessionConfig& cfg, InProcHub& hub);

void run3_void(const SessionConfig& cfg, const std::function<void(Party&)>& fn);

}  // namespace triq
