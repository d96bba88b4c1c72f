// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#include "cban/core/http_util.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include "cban/core/errors.hpp"

namespace cban {

std::optional<HttpResponse> http_get(const std::string& base_url, const std::string& path,
                                     int connect_timeout_ms) {
  httplib::Client cli(base_url);
  cli.set_connection_timeout(connect_timeout_ms / 1000,
                             (connect_timeout_ms % 1000) * 1000);
  cli.set_read_timeout(30, 0);
  auto res = cli.Get(path);
  if (!res) return std::nullopt;
  return HttpResponse{res->status, res->body};
}

int ThreadedServer::start(const std::string& host) {
  port_ = server.bind_to_any_port(host);
  if (port_ <= 0) {
    throw Error(Errc::io_error, "cannot bind server socket");
  }
  thread_ = std::thread([this] { server.listen_after_bind(); });
  server.wait_until_ready();
  return port_;
}

void ThreadedServer::stop() {
  if (thread_.joinable()) {
    server.stop();
    thread_.join();
  }
}

int pick_free_port() {
  int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) {
    throw Error(Errc::io_error, "socket failed");
  }
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = 0;
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    ::close(fd);
    throw Error(Errc::io_error, "bind failed");
  }
  socklen_t len = sizeof(addr);
  if (::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
    ::close(fd);
    throw Error(Errc::io_error, "getsockname failed");
  }
  int port = ntohs(addr.sin_port);
  ::close(fd);
  return port;
}

}  // namespace cban
