#pragma once

// Reliable ordered frame channels between parties. Two transports behind one
// interface: in-process queues (tests, single-binary runs) and TCP sockets
// (three-process runs). Framing is identical on both: 4-byte little-endian
// payload length, then the payload.

#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <thread>

#include "triq/common.h"

namespace triq {

class Link {
public:
    virtual ~Link() = default;
    virtual void send_frame(std::vector<u8> frame) = 0;
    virtual std::vector<u8> recv_frame() = 0;
};

class FrameQueue {
public:
    void push(std::vector<u8> f) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            q_.push_back(std::move(f));
        }
        cv_.notify_one();
    }
    std::vector<u8> pop() {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return !q_.empty() || closed_; });
        if (q_.empty()) throw ProtocolError("channel closed");
        std::vector<u8> f = std::move(q_.front());
        q_.pop_front();
        return f;
    }
    void close() {
        {
            std::lock_guard<std::mutex> lk(mu_);
            closed_ = true;
        }
        cv_.notify_all();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<std::vector<u8>> q_;
    bool closed_ = false;
};

class InProcLink : public Link {
public:
    InProcLink(std::shared_ptr<FrameQueue> out, std::shared_ptr<FrameQueue> in)
        : out_(std::move(out)), in_(std::move(in)) {}
    void send_frame(std::vector<u8> frame) override { out_->push(std::move(frame)); }
    std::vector<u8> recv_frame() override { return in_->pop(); }

private:
    std::shared_ptr<FrameQueue> out_, in_;
};

// Six directed queues wiring three in-process parties.
struct InProcHub {
    // q[a][b]: frames from party a+1 to party b+1
    std::shared_ptr<FrameQueue> q[3][3];

    InProcHub() {
        for (auto& row : q)
            for (auto& c : row) c = std::make_shared<FrameQueue>();
    }

    std::unique_ptr<Link> link(int from, int to) {
        return std::make_unique<InProcLink>(q[from - 1][to - 1], q[to - 1][from - 1]);
    }
};

// TCP link; a writer thread drains the outgoing queue so a send never blocks
// the protocol thread (both peers of a round may send before either reads).
class SocketLink : public Link {
public:
    explicit SocketLink(int fd);
    ~SocketLink() override;
    void send_frame(std::vector<u8> frame) override;
    std::vector<u8> recv_frame() override;

private:
    void writer_loop();
    int fd_;
    FrameQueue outq_;
    std::thread writer_;
};

// Blocking helpers used by the socket transport and the party binary.
int tcp_listen_accept(int port);
int tcp_connect_retry(const std::string& host, int port, int attempts = 100);

}  // namespace triq
