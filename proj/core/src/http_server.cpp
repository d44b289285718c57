#include "indcol/http_server.hpp"

#include "httplib.h"

namespace indcol {

struct HttpServer::Impl {
  SessionService& service;
  httplib::Server server;

  explicit Impl(SessionService& s) : service(s) {}
};

namespace {

constexpr const char* kJson = "application/json";

template <typename Body>
void guarded(httplib::Response& res, Body body) {
  try {
    res.set_content(body(), kJson);
  } catch (const ServiceError& e) {
    res.status = e.http_status();
    res.set_content(to_json(e), kJson);
  } catch (const std::exception& e) {
    res.status = 500;
    res.set_content(to_json(ServiceError(ServiceError::Code::bad_request, e.what())), kJson);
  }
}

}  // namespace

HttpServer::HttpServer(SessionService& service, std::optional<std::filesystem::path> assets)
    : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  auto& svc = impl_->service;

  srv.Post("/api/session", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto view = svc.create_session(parse_create_request(req.body));
      res.status = 201;
      return std::string(R"({"id":")") + view.id + R"(","counter":)" + std::to_string(view.counter) +
             R"(,"state":)" + to_json(view) + "}";
    });
  });
  srv.Get(R"(/api/session/([0-9a-f]+))", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(svc.get_state(req.matches[1])); });
  });
  srv.Post(R"(/api/session/([0-9a-f]+)/move)", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto m = parse_move_request(req.body);
      return to_json(svc.submit_move(req.matches[1], m.move, m.expected));
    });
  });
  srv.Post(R"(/api/session/([0-9a-f]+)/engine)", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(svc.engine_move(req.matches[1], parse_counter(req.body))); });
  });
  srv.Get(R"(/api/session/([0-9a-f]+)/eval)", [&svc](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return to_json(svc.evaluate_moves(req.matches[1])); });
  });
  srv.Get(R"(/api/families/([a-z0-9]+))", [](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string spec = req.matches[1];
      if (req.has_param("args")) spec += ":" + req.get_param_value("args");
      std::uint64_t seed = 1;
      if (req.has_param("seed")) seed = std::stoull(req.get_param_value("seed"));
      return to_json(family_view(spec, seed));
    });
  });
  if (assets) srv.set_mount_point("/", assets->string());
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }
int HttpServer::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }
bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }
void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}
bool HttpServer::running() const { return impl_->server.is_running(); }
void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace indcol
