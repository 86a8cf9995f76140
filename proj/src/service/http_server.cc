#include "reqlint/service/http_server.h"

#include <httplib.h>

#include "reqlint/common/error.h"
#include "reqlint/common/log.h"
#include "reqlint/common/strings.h"

namespace reqlint::service {

using httplib::Request;
using httplib::Response;

namespace {

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownProject:
    case ErrorCode::kUnknownRequirement:
      return 404;
    case ErrorCode::kDuplicateKey:
      return 409;
    case ErrorCode::kIoError:
      return 500;
    default:
      return 400;
  }
}

void send_json(Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

void send_error(Response& res, int status, std::string_view code, std::string_view message) {
  send_json(res, status, {{"error", code}, {"message", message}});
}

json parse_body(const Request& req) {
  try {
    auto j = json::parse(req.body);
    if (!j.is_object()) raise(ErrorCode::kInvalidArgs, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    raise(ErrorCode::kInvalidArgs, std::string("malformed JSON: ") + e.what());
  }
}

std::string string_field(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) raise(ErrorCode::kInvalidArgs, std::string("missing field '") + key + "'");
    return "";
  }
  if (!j[key].is_string()) raise(ErrorCode::kInvalidArgs, std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

// Runs a handler and maps library errors to JSON error responses.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const Request& req, Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      send_error(res, status_for(e.code()), error_code_name(e.code()), e.what());
    } catch (const json::exception& e) {
      send_error(res, 400, "InvalidArgs", e.what());
    } catch (const std::exception& e) {
      log::error(std::string("request failed: ") + e.what());
      send_error(res, 500, "Internal", e.what());
    }
  };
}

std::string actor_of(const json& body, const Request& req) {
  auto actor = string_field(body, "actor", false);
  if (actor.empty() && req.has_header("X-Actor")) actor = req.get_header_value("X-Actor");
  return actor.empty() ? "anonymous" : actor;
}

}  // namespace

HttpServer::HttpServer(Workbench& workbench, std::filesystem::path ui_dir)
    : workbench_(workbench), server_(std::make_unique<httplib::Server>()) {
  routes();
  if (!ui_dir.empty()) {
    if (!server_->set_mount_point("/ui", ui_dir.string())) {
      log::warning("UI directory " + ui_dir.string() + " not found; /ui is not served");
    }
  }
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) { return server_->listen(host, port); }
int HttpServer::bind_to_any_port(const std::string& host) { return server_->bind_to_any_port(host); }
bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }
void HttpServer::stop() { server_->stop(); }
void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

void HttpServer::routes() {
  auto& s = *server_;
  Workbench& wb = workbench_;

  s.Post("/projects", guarded([&wb](const Request& req, Response& res) {
    const auto body = parse_body(req);
    if (!body.contains("profile")) raise(ErrorCode::kInvalidArgs, "missing field 'profile'");
    const auto p = wb.create_project(string_field(body, "name", true), profile_from_json(body["profile"]));
    send_json(res, 201, project_json(p));
  }));

  s.Get("/projects", guarded([&wb](const Request&, Response& res) {
    json out = json::array();
    for (const auto& p : wb.projects()) out.push_back(project_json(p));
    send_json(res, 200, out);
  }));

  s.Get(R"(/projects/([^/]+))", guarded([&wb](const Request& req, Response& res) {
    send_json(res, 200, project_json(wb.project(req.matches[1].str())));
  }));

  s.Get(R"(/projects/([^/]+)/requirements)", guarded([&wb](const Request& req, Response& res) {
    json out = json::array();
    for (const auto& r : wb.requirements(req.matches[1].str())) out.push_back(requirement_json(r));
    send_json(res, 200, out);
  }));

  s.Post(R"(/projects/([^/]+)/requirements)", guarded([&wb](const Request& req, Response& res) {
    const auto body = parse_body(req);
    bool created = false;
    const auto r = wb.add_requirement(req.matches[1].str(), string_field(body, "text", true), &created);
    send_json(res, created ? 201 : 200, requirement_json(r));
  }));

  s.Get(R"(/requirements/([^/]+))", guarded([&wb](const Request& req, Response& res) {
    send_json(res, 200, requirement_json(wb.requirement(req.matches[1].str())));
  }));

  s.Post("/analyze", guarded([&wb](const Request& req, Response& res) {
    const auto body = parse_body(req);
    const auto text = string_field(body, "text", true);
    if (trim(text).empty()) raise(ErrorCode::kEmptyText, "text is blank");
    testability::AlphaProfile profile;
    if (body.contains("project_id")) {
      profile = wb.project(string_field(body, "project_id", true)).profile;
    } else if (body.contains("profile")) {
      profile = profile_from_json(body["profile"]);
    } else {
      raise(ErrorCode::kInvalidArgs, "give either 'project_id' or 'profile'");
    }
    send_json(res, 200, analysis_json(wb.analyze(text, profile)));
  }));

  s.Put(R"(/requirements/([^/]+)/labels)", guarded([&wb](const Request& req, Response& res) {
    const auto body = parse_body(req);
    if (!body.contains("labels")) raise(ErrorCode::kInvalidArgs, "missing field 'labels'");
    const auto r = wb.record_labels(req.matches[1].str(), labels_from_json(body["labels"]), actor_of(body, req));
    send_json(res, 200, requirement_json(r));
  }));

  s.Post(R"(/requirements/([^/]+)/review)", guarded([&wb](const Request& req, Response& res) {
    const auto body = req.body.empty() ? json::object() : parse_body(req);
    bool reviewed = true;
    if (body.contains("reviewed")) {
      if (!body["reviewed"].is_boolean()) raise(ErrorCode::kInvalidArgs, "'reviewed' must be a boolean");
      reviewed = body["reviewed"].get<bool>();
    }
    send_json(res, 200, requirement_json(wb.set_review(req.matches[1].str(), reviewed, actor_of(body, req))));
  }));

  s.Post(R"(/projects/([^/]+)/import)", guarded([&wb](const Request& req, Response& res) {
    const bool reviewed = req.has_param("reviewed") && req.get_param_value("reviewed") == "true";
    const auto actor = req.has_header("X-Actor") ? req.get_header_value("X-Actor") : "anonymous";
    const auto result = wb.import_csv(req.matches[1].str(), req.body, reviewed, actor);
    json errors = json::array();
    for (const auto& e : result.errors) errors.push_back({{"line", e.line}, {"reason", e.reason}});
    send_json(res, 200, {{"created", result.created}, {"duplicates", result.duplicates}, {"errors", errors}});
  }));

  s.Get(R"(/projects/([^/]+)/export)", guarded([&wb](const Request& req, Response& res) {
    res.set_content(wb.export_csv(req.matches[1].str()), "text/csv; charset=utf-8");
  }));

  s.Get(R"(/projects/([^/]+)/report)", guarded([&wb](const Request& req, Response& res) {
    auto policy = testability::AlphaPolicy::kSoftened;
    if (req.has_param("policy")) {
      const auto p = testability::parse_policy(req.get_param_value("policy"));
      if (!p) raise(ErrorCode::kInvalidArgs, "policy is softened or hardened");
      policy = *p;
    }
    evaluation::EvaluationOptions opt;
    opt.permutations = 2000;
    send_json(res, 200, project_report_json(wb.project_report(req.matches[1].str(), policy, opt)));
  }));
}

}  // namespace reqlint::service
