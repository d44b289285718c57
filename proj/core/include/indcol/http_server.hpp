#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "indcol/service.hpp"

namespace indcol {

/**
 * HTTP front end for SessionService:
 *   POST /api/session                 {graph6|family, variant, humanRole}
 *   GET  /api/session/{id}
 *   POST /api/session/{id}/move       {vertex:int}|{pass:true}, optional counter
 *   POST /api/session/{id}/engine
 *   GET  /api/session/{id}/eval
 *   GET  /api/families/{name}?args=..&seed=..
 * Static files are served from `assets` when given.
 */
class HttpServer {
 public:
  explicit HttpServer(SessionService& service, std::optional<std::filesystem::path> assets = std::nullopt);
  ~HttpServer();

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Returns the bound port, or -1.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  bool running() const;
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace indcol
