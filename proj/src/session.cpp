#include "triq/session.h"

#include <fstream>
#include <sstream>
#include <thread>

namespace triq {

namespace {

std::vector<u8> words_to_bytes(const u64* w, std::size_t n) {
    std::vector<u8> out(8 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < 8; ++k) out[8 * i + k] = u8(w[i] >> (8 * k));
    return out;
}

std::vector<u64> bytes_to_words(const std::vector<u8>& b) {
    if (b.size() % 8) throw ProtocolError("frame not word-aligned");
    std::vector<u64> out(b.size() / 8);
    for (std::size_t i = 0; i < out.size(); ++i) {
        u64 v = 0;
        for (int k = 7; k >= 0; --k) v = (v << 8) | b[8 * i + k];
        out[i] = v;
    }
    return out;
}

// Stream shared by the pair (j, j+1), derived from the public master seed.
Prg pair_stream(const SessionConfig& cfg, int j, u64 tag) {
    Prg root(cfg.master_seed, 0x7261697170ULL);  // "pairq"
    return root.fork(u64(j)).fork(tag);
}

}  // namespace

SessionConfig SessionConfig::parse(const std::string& text) {
    SessionConfig c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "master_seed") c.master_seed = std::stoull(val);
        else if (key == "hash_seed") c.hash_seed = std::stoull(val);
        else if (key == "spn_rounds") c.spn_rounds = std::stoi(val);
        else if (key == "kappa") c.kappa = u32(std::stoul(val));
        else if (key == "sigma") c.sigma = u32(std::stoul(val));
        else if (key == "backend") {
            if (val == "mpc") c.backend = Backend::Mpc;
            else if (val == "dealer") c.backend = Backend::Dealer;
            else throw InputError("unknown backend: " + val);
        } else if (key.size() == 11 && key.rfind("party", 0) == 0 && key.substr(7) == "host")
            c.host[std::size_t(key[5] - '1')] = val;
        else if (key.size() == 11 && key.rfind("party", 0) == 0 && key.substr(7) == "port")
            c.port[std::size_t(key[5] - '1')] = std::stoi(val);
        else throw InputError("unknown config key: " + key);
    }
    return c;
}

SessionConfig SessionConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string SessionConfig::serialize() const {
    std::ostringstream out;
    out << "master_seed=" << master_seed << "\n";
    out << "hash_seed=" << hash_seed << "\n";
    out << "backend=" << (backend == Backend::Mpc ? "mpc" : "dealer") << "\n";
    out << "spn_rounds=" << spn_rounds << "\n";
    out << "kappa=" << kappa << "\n";
    out << "sigma=" << sigma << "\n";
    for (int p = 1; p <= 3; ++p) {
        out << "party" << p << ".host=" << host[std::size_t(p - 1)] << "\n";
        out << "party" << p << ".port=" << port[std::size_t(p - 1)] << "\n";
    }
    return out.str();
}

Party::Party(int idx, const SessionConfig& cfg, std::unique_ptr<Link> to_next,
             std::unique_ptr<Link> to_prev)
    : idx_(idx), cfg_(cfg), next_(std::move(to_next)), prev_(std::move(to_prev)) {
    int sn = idx_;               // pair (idx, idx+1)
    int sp = prev_party(idx_);   // pair (idx-1, idx)
    prg_next_ = pair_stream(cfg, sn, 1);
    prg_prev_ = pair_stream(cfg, sp, 1);
    zeros_ = ZeroShareGen(pair_stream(cfg, sn, 2), pair_stream(cfg, sp, 2));
    prg_own_ = Prg(cfg.master_seed, 0x6f776e00ULL + u64(idx_)).fork(3);
    // PRF key word w_j comes from pair (j-1, j); party p holds (w_p, w_{p+1}).
    Prg kp = pair_stream(cfg, sp, 4);
    Prg kn = pair_stream(cfg, sn, 4);
    prf_first_[0] = kp.next();
    prf_first_[1] = kp.next();
    prf_second_[0] = kn.next();
    prf_second_[1] = kn.next();
}

std::pair<std::vector<std::vector<u8>>, std::vector<std::vector<u8>>> Party::exchange(
    std::vector<Outgoing> out, int expect_next, int expect_prev) {
    bool active = !out.empty() || expect_next > 0 || expect_prev > 0;
    if (!active) return {};
    ++round_;
    meter_.on_round(round_);
    for (auto& m : out) {
        if (m.dest == next_party(idx_)) {
            meter_.on_send(0, round_, m.bytes.size());
            next_->send_frame(std::move(m.bytes));
        } else if (m.dest == prev_party(idx_)) {
            meter_.on_send(1, round_, m.bytes.size());
            prev_->send_frame(std::move(m.bytes));
        } else {
            throw ProtocolError("exchange: destination is not a neighbour");
        }
    }
    std::vector<std::vector<u8>> from_next, from_prev;
    for (int i = 0; i < expect_next; ++i) {
        from_next.push_back(next_->recv_frame());
        meter_.on_recv(0, round_, from_next.back().size());
    }
    for (int i = 0; i < expect_prev; ++i) {
        from_prev.push_back(prev_->recv_frame());
        meter_.on_recv(1, round_, from_prev.back().size());
    }
    return {std::move(from_next), std::move(from_prev)};
}

std::vector<u8> Party::rotate_prev(std::vector<u8> to_prev) {
    auto [fn, fp] = exchange({{prev_party(idx_), std::move(to_prev)}}, 1, 0);
    return std::move(fn[0]);
}

std::vector<u8> Party::rotate_next(std::vector<u8> to_next) {
    auto [fn, fp] = exchange({{next_party(idx_), std::move(to_next)}}, 0, 1);
    return std::move(fp[0]);
}

void Party::send_only(int dest, std::vector<u8> bytes) {
    exchange({{dest, std::move(bytes)}}, 0, 0);
}

std::vector<u8> Party::recv_only(int src) {
    if (src == next_party(idx_)) {
        auto [fn, fp] = exchange({}, 1, 0);
        return std::move(fn[0]);
    }
    auto [fn, fp] = exchange({}, 0, 1);
    return std::move(fp[0]);
}

ShareVec Party::and_words(const ShareVec& x, const ShareVec& y) {
    return std::move(and_words_batch({{&x, &y}})[0]);
}

std::vector<ShareVec> Party::and_words_batch(
    const std::vector<std::pair<const ShareVec*, const ShareVec*>>& pairs) {
    std::size_t total = 0;
    for (auto& [x, y] : pairs) total += x->size();
    std::vector<u64> z(total);
    std::size_t off = 0;
    for (auto& [x, y] : pairs) {
        kern::ops().and_cross(z.data() + off, x->a.data(), x->b.data(), y->a.data(),
                              y->b.data(), x->size());
        off += x->size();
    }
    zbuf_.resize(total);
    zeros_.fill(zbuf_.data(), total);
    kern::ops().xor_words(z.data(), z.data(), zbuf_.data(), total);
    std::vector<u64> from_next = bytes_to_words(rotate_prev(words_to_bytes(z.data(), total)));
    std::vector<ShareVec> out;
    out.reserve(pairs.size());
    off = 0;
    for (auto& [x, y] : pairs) {
        ShareVec r(x->size());
        std::copy(z.begin() + off, z.begin() + off + x->size(), r.a.begin());
        std::copy(from_next.begin() + off, from_next.begin() + off + x->size(), r.b.begin());
        off += x->size();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<u64> Party::open(const ShareVec& x) {
    std::vector<u64> third = bytes_to_words(rotate_prev(words_to_bytes(x.b.data(), x.size())));
    std::vector<u64> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.a[i] ^ x.b[i] ^ third[i];
    return out;
}

std::optional<std::vector<u64>> Party::open_to(const ShareVec& x, int dst) {
    if (idx_ == next_party(dst)) {
        send_only(dst, words_to_bytes(x.b.data(), x.size()));
        return std::nullopt;
    }
    if (idx_ == dst) {
        std::vector<u64> third = bytes_to_words(recv_only(next_party(idx_)));
        std::vector<u64> out(x.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.a[i] ^ x.b[i] ^ third[i];
        return out;
    }
    return std::nullopt;
}

ShareVec Party::share_from(const std::vector<u64>* vals, int src, std::size_t n) {
    if (idx_ == src) {
        if (!vals || vals->size() != n) throw ProtocolError("share_from: bad source data");
        auto shares = share_vector(*vals, prg_own_);
        int nx = next_party(idx_), pv = prev_party(idx_);
        std::vector<u8> fn = shares[std::size_t(nx - 1)].serialize();
        std::vector<u8> fp = shares[std::size_t(pv - 1)].serialize();
        exchange({{nx, std::move(fn)}, {pv, std::move(fp)}}, 0, 0);
        return std::move(shares[std::size_t(idx_ - 1)]);
    }
    ShareVec r = ShareVec::deserialize(recv_only(src));
    if (r.size() != n) throw ProtocolError("share_from: size mismatch");
    return r;
}

void Party::handshake() {
    u64 mine_next = zeros_.checksum_next();
    u64 mine_prev = zeros_.checksum_prev();
    auto [fn, fp] =
        exchange({{next_party(idx_), words_to_bytes(&mine_next, 1)}}, 0, 1);
    u64 theirs = bytes_to_words(fp[0])[0];
    if (theirs != mine_prev)
        throw ProtocolError("session handshake: pairwise seed mismatch with previous party");
}

PartySet make_inproc_parties(const SessionConfig& cfg, InProcHub& hub) {
    PartySet ps;
    for (int p = 1; p <= 3; ++p)
        ps.p[std::size_t(p - 1)] = std::make_unique<Party>(
            p, cfg, hub.link(p, next_party(p)), hub.link(p, prev_party(p)));
    return ps;
}

void run3_void(const SessionConfig& cfg, const std::function<void(Party&)>& fn) {
    InProcHub hub;
    PartySet ps = make_inproc_parties(cfg, hub);
    std::array<std::exception_ptr, 3> errs{};
    std::array<std::thread, 3> threads;
    for (int i = 0; i < 3; ++i) {
        threads[std::size_t(i)] = std::thread([&, i] {
            try {
                fn(*ps.p[std::size_t(i)]);
            } catch (...) {
                errs[std::size_t(i)] = std::current_exception();
                // unblock peers
                for (auto& row : hub.q)
                    for (auto& c : row) c->close();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace triq
