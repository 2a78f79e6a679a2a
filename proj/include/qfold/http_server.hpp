#pragma once

#include <memory>
#include <string>

#include "qfold/service.hpp"

namespace qfold {

/// HTTP front end for SessionService. Every response is JSON; CORS is open so a UI
/// served from elsewhere can talk to it.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port; throws Error("bind_failed").
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  /// listen() on a background thread.
  void start();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qfold
