#include "triq/channel.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>

namespace triq {

namespace {

void write_all(int fd, const u8* p, std::size_t n) {
    while (n) {
        ssize_t k = ::write(fd, p, n);
        if (k <= 0) throw ProtocolError("socket write failed");
        p += k;
        n -= std::size_t(k);
    }
}

void read_all(int fd, u8* p, std::size_t n) {
    while (n) {
        ssize_t k = ::read(fd, p, n);
        if (k <= 0) throw ProtocolError("socket read failed");
        p += k;
        n -= std::size_t(k);
    }
}

}  // namespace

SocketLink::SocketLink(int fd) : fd_(fd) {
    int one = 1;
    ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    writer_ = std::thread([this] { writer_loop(); });
}

SocketLink::~SocketLink() {
    outq_.close();
    if (writer_.joinable()) writer_.join();
    ::shutdown(fd_, SHUT_RDWR);
    ::close(fd_);
}

void SocketLink::writer_loop() {
    try {
        for (;;) {
            std::vector<u8> f = outq_.pop();
            u8 hdr[4];
            u32 len = u32(f.size());
            for (int i = 0; i < 4; ++i) hdr[i] = u8(len >> (8 * i));
            write_all(fd_, hdr, 4);
            if (len) write_all(fd_, f.data(), len);
        }
    } catch (const ProtocolError&) {
        // queue closed or peer gone; the protocol thread sees the failure on
        // its next recv
    }
}

void SocketLink::send_frame(std::vector<u8> frame) { outq_.push(std::move(frame)); }

std::vector<u8> SocketLink::recv_frame() {
    u8 hdr[4];
    read_all(fd_, hdr, 4);
    u32 len = u32(hdr[0]) | u32(hdr[1]) << 8 | u32(hdr[2]) << 16 | u32(hdr[3]) << 24;
    std::vector<u8> f(len);
    if (len) read_all(fd_, f.data(), len);
    return f;
}

int tcp_listen_accept(int port) {
    int s = ::socket(AF_INET, SOCK_STREAM, 0);
    if (s < 0) throw ProtocolError("socket() failed");
    int one = 1;
    ::setsockopt(s, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(u_int16_t(port));
    if (::bind(s, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0)
        throw ProtocolError("bind failed on port " + std::to_string(port));
    if (::listen(s, 1) < 0) throw ProtocolError("listen failed");
    int fd = ::accept(s, nullptr, nullptr);
    ::close(s);
    if (fd < 0) throw ProtocolError("accept failed");
    return fd;
}

int tcp_connect_retry(const std::string& host, int port, int attempts) {
    for (int t = 0; t < attempts; ++t) {
        int s = ::socket(AF_INET, SOCK_STREAM, 0);
        if (s < 0) throw ProtocolError("socket() failed");
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_port = htons(u_int16_t(port));
        if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
            ::close(s);
            throw ProtocolError("bad address: " + host);
        }
        if (::connect(s, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) == 0) return s;
        ::close(s);
        ::usleep(100 * 1000);
    }
    throw ProtocolError("connect failed: " + host + ":" + std::to_string(port));
}

}  // namespace triq
