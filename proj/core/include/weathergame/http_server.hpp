#pragma once

#include <memory>
#include <string>

#include "weathergame/service.hpp"

namespace weathergame::api {

// HTTP/JSON binding of GameService under /v1.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Serves a directory of static files (e.g. a browser client) under "/".
  // Returns false if the directory does not exist.
  bool mount_static(const std::string& directory);

  bool bind(const std::string& host, int port);
  // Returns the chosen port, or -1 on failure.
  int bind_to_any_port(const std::string& host);
  // Blocks until stop().
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace weathergame::api
