#include "httplib.h"
#include "semsketch/service.hpp"

namespace semsketch {

namespace {

void reply(httplib::Response& res, const HttpResponse& response) {
  res.status = response.status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(response.body, "application/json; charset=utf-8");
}

}  // namespace

struct SketchServer::Impl {
  httplib::Server server;
};

SketchServer::SketchServer(const SketchService& service) : impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;
  server.Get(".*", [&service](const httplib::Request& req, httplib::Response& res) {
    auto path = req.target.substr(0, req.target.find('?'));
    QueryParams params(req.params.begin(), req.params.end());
    reply(res, service.get(path, params));
  });
  auto refuse = [](const httplib::Request&, httplib::Response& res) {
    reply(res, {405, R"({"error":"E_USAGE","message":"read-only API: GET only"})"});
  };
  server.Post(".*", refuse);
  server.Put(".*", refuse);
  server.Patch(".*", refuse);
  server.Delete(".*", refuse);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET");
  });
}

SketchServer::~SketchServer() = default;

int SketchServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void SketchServer::run() { impl_->server.listen_after_bind(); }

void SketchServer::stop() { impl_->server.stop(); }

bool serve(const SketchService& service, const std::string& host, int port) {
  SketchServer server(service);
  if (server.bind(host, port) < 0) return false;
  server.run();
  return true;
}

}  // namespace semsketch
