#include "weathergame/http_server.hpp"

#include <httplib.h>

#include "weathergame/errors.hpp"

namespace weathergame::api {
namespace {

constexpr const char* kJson = "application/json";

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, const ApiError& e) {
  send_json(res, http_status(e.code()), error_body(e));
}

Json parse_body(const httplib::Request& req) {
  if (req.body.find_first_not_of(" \t\r\n") == std::string::npos) return Json();
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw ApiError(ErrorCode::kBadRequest, std::string("request body is not JSON: ") + e.what());
  }
}

int parse_week(const std::string& text) {
  if (text.empty() || text.size() > 3 || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ApiError(ErrorCode::kBadRequest, "week must be an integer 1..4");
  }
  const int week = std::stoi(text);
  if (week < 1 || week > kWeeks) throw ApiError(ErrorCode::kBadRequest, "week must be an integer 1..4");
  return week;
}

std::optional<std::string> admin_token(const httplib::Request& req) {
  if (req.has_header("X-Admin-Token")) return req.get_header_value("X-Admin-Token");
  const auto auth = req.get_header_value("Authorization");
  constexpr std::string_view bearer = "Bearer ";
  if (auth.rfind(bearer, 0) == 0) return auth.substr(bearer.size());
  return std::nullopt;
}

template <typename Fn>
httplib::Server::Handler handler(Fn fn) {
  return [fn](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const ApiError& e) {
      send_error(res, e);
    } catch (const std::exception& e) {
      send_json(res, 500, {{"error", {{"code", "INTERNAL"}, {"message", e.what()}}}});
    }
  };
}

}  // namespace

struct HttpServer::Impl {
  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(new Impl{service, {}}) {
  auto& svc = impl_->service;
  auto& srv = impl_->server;

  srv.Post("/v1/sessions", handler([&svc](const httplib::Request& req, httplib::Response& res) {
    send_json(res, 201, svc.create_session(parse_body(req)));
  }));
  srv.Get(R"(/v1/sessions/([^/]+))", handler([&svc](const httplib::Request& req, httplib::Response& res) {
    send_json(res, 200, svc.get_session(req.matches[1]));
  }));
  srv.Get(R"(/v1/sessions/([^/]+)/rounds/([^/]+))",
          handler([&svc](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            const int week = parse_week(req.matches[2]);
            send_json(res, 200, svc.get_round(id, week));
          }));
  srv.Post(R"(/v1/sessions/([^/]+)/decisions)",
           handler([&svc](const httplib::Request& req, httplib::Response& res) {
             send_json(res, 200, svc.post_decision(req.matches[1], parse_body(req)));
           }));
  srv.Post(R"(/v1/sessions/([^/]+)/numeracy)",
           handler([&svc](const httplib::Request& req, httplib::Response& res) {
             send_json(res, 200, svc.post_numeracy(req.matches[1], parse_body(req)));
           }));
  srv.Get(R"(/v1/sessions/([^/]+)/summary)",
          handler([&svc](const httplib::Request& req, httplib::Response& res) {
            send_json(res, 200, svc.get_summary(req.matches[1]));
          }));
  srv.Get("/v1/export", handler([&svc](const httplib::Request& req, httplib::Response& res) {
    ExportFilter filter;
    try {
      if (req.has_param("condition")) filter.condition = parse_condition(req.get_param_value("condition"));
      if (req.has_param("from")) filter.from = parse_timestamp(req.get_param_value("from"));
      if (req.has_param("to")) filter.to = parse_timestamp(req.get_param_value("to"));
    } catch (const DomainError& e) {
      throw ApiError(ErrorCode::kBadRequest, e.what());
    }
    res.status = 200;
    res.set_content(svc.export_events(admin_token(req), filter), "application/x-ndjson");
  }));
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::mount_static(const std::string& directory) {
  return impl_->server.set_mount_point("/", directory);
}

bool HttpServer::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }

int HttpServer::bind_to_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace weathergame::api
