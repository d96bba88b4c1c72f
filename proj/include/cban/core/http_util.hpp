// Copyright 2026 The CBAN Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <thread>

#include <httplib.h>

namespace cban {

struct HttpResponse {
  int status = 0;
  std::string body;
};

// nullopt means the host could not be reached at all; an HTTP error
// status is a reachable answer and comes back as a response.
std::optional<HttpResponse> http_get(const std::string& base_url, const std::string& path,
                                     int connect_timeout_ms = 2000);

// httplib server bound to an ephemeral loopback port, listening on a
// background thread. Register handlers on `server` before start().
class ThreadedServer {
 public:
  ThreadedServer() = default;
  ~ThreadedServer() { stop(); }
  ThreadedServer(const ThreadedServer&) = delete;
  ThreadedServer& operator=(const ThreadedServer&) = delete;

  int start(const std::string& host = "127.0.0.1");
  void stop();
  int port() const { return port_; }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  httplib::Server server;

 private:
  std::thread thread_;
  int port_ = -1;
};

// Ephemeral port reservation for subprocess servers that need a --port
// argument. Subject to reuse races; callers retry.
int pick_free_port();

}  // namespace cban
