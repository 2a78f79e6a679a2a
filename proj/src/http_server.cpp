#include "qfold/http_server.hpp"

#include <thread>

#include <httplib.h>

#include "qfold/error.hpp"

namespace qfold {

struct HttpServer::Impl {
  SessionService& service;
  httplib::Server server;
  std::thread thread;

  explicit Impl(SessionService& s) : service(s) {}
};

HttpServer::HttpServer(SessionService& service) : impl_(std::make_unique<Impl>(service)) {
  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    Request r{req.method, req.path, req.body, {}};
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    const Response out = impl_->service.handle(r);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  auto& s = impl_->server;
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS"},
                         {"Access-Control-Allow-Headers", "Content-Type"}});
  s.Get(R"(/api/.*)", forward);
  s.Put(R"(/api/.*)", forward);
  s.Post(R"(/api/.*)", forward);
  s.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  auto& s = impl_->server;
  const int bound = port == 0 ? s.bind_to_any_port(host) : (s.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) throw Error("bind_failed", "cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::start() {
  impl_->thread = std::thread([this] { listen(); });
  impl_->server.wait_until_ready();
}

void HttpServer::stop() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace qfold
