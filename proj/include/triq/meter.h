#pragma once

#include <chrono>
#include <utility>

#include "triq/common.h"

namespace triq {

// Transcript shape: the ordered (round, channel, direction, byte-length)
// sequence one party observes. Obliviousness tests compare these sequences;
// message contents never enter.
struct TranscriptEntry {
    u32 round;
    u8 channel;  // 0 = link to next party, 1 = link to prev party
    u8 dir;      // 0 = sent, 1 = received
    u64 bytes;

    bool operator==(const TranscriptEntry&) const = default;
};

struct Transcript {
    std::vector<TranscriptEntry> entries;
    u64 sent_bytes = 0;
    u64 recv_bytes = 0;
    u32 rounds = 0;
    // Named positions into `entries`, used to compare sub-protocol slices.
    std::vector<std::pair<std::string, std::size_t>> marks;

    void mark(const std::string& label) { marks.emplace_back(label, entries.size()); }

    std::vector<TranscriptEntry> slice(const std::string& from, const std::string& to) const {
        std::size_t lo = 0, hi = entries.size();
        for (auto& [l, i] : marks) {
            if (l == from) lo = i;
            if (l == to) hi = i;
        }
        return {entries.begin() + lo, entries.begin() + hi};
    }

    static bool same_shape(const Transcript& x, const Transcript& y) {
        return x.entries == y.entries;
    }
};

struct MeterReport {
    u64 total_bytes = 0;  // sent + received for one party
    u32 rounds = 0;
    double wall_ms = 0;
    bool partial = false;  // snapshot taken mid-session
};

class Meter {
public:
    Meter() : start_(std::chrono::steady_clock::now()) {}

    void on_send(u8 channel, u32 round, u64 bytes) {
        t_.entries.push_back({round, channel, 0, bytes});
        t_.sent_bytes += bytes;
    }
    void on_recv(u8 channel, u32 round, u64 bytes) {
        t_.entries.push_back({round, channel, 1, bytes});
        t_.recv_bytes += bytes;
    }
    void on_round(u32 round) { t_.rounds = round; }

    void finish() {
        finished_ = true;
        wall_ms_ = elapsed_ms();
    }

    MeterReport report() const {
        MeterReport r;
        r.total_bytes = t_.sent_bytes + t_.recv_bytes;
        r.rounds = t_.rounds;
        r.wall_ms = finished_ ? wall_ms_ : elapsed_ms();
        r.partial = !finished_;
        return r;
    }

    const Transcript& transcript() const { return t_; }
    Transcript& transcript() { return t_; }

private:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

    Transcript t_;
    std::chrono::steady_clock::time_point start_;
    bool finished_ = false;
    double wall_ms_ = 0;
};

// The paper reports the maximum over parties of (sent + received).
inline MeterReport max_over_parties(const MeterReport& r1, const MeterReport& r2,
                                    const MeterReport& r3) {
    MeterReport out;
    out.total_bytes = std::max({r1.total_bytes, r2.total_bytes, r3.total_bytes});
    out.rounds = std::max({r1.rounds, r2.rounds, r3.rounds});
    out.wall_ms = std::max({r1.wall_ms, r2.wall_ms, r3.wall_ms});
    out.partial = r1.partial || r2.partial || r3.partial;
    return out;
}

}  // namespace triq
