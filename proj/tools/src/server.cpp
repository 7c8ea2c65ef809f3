#include "server.hpp"

#include "httplib.h"

namespace trigrid::api {

Response ResponseCache::get_or_compute(const std::string& endpoint, const Json& request) {
  const std::string key = endpoint + '\n' + request.dump();
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  Response r = handle(endpoint, request);
  if (r.outcome == Outcome::kInternalError) return r;
  std::lock_guard lock(mutex_);
  return entries_.try_emplace(key, std::move(r)).first->second;
}

std::size_t ResponseCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

namespace {

void reply(httplib::Response& res, const Response& r) {
  res.status = http_status(r.outcome);
  res.set_content(r.body, r.content_type);
}

void reply_usage(httplib::Response& res, const std::string& message) {
  reply(res, {Outcome::kUsageError, json::dump(json::error_document("usage_error", message))});
}

}  // namespace

std::unique_ptr<httplib::Server> make_server(ResponseCache& cache) {
  auto server = std::make_unique<httplib::Server>();
  server->set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  server->Get("/api/graphs", [&cache](const httplib::Request&, httplib::Response& res) {
    reply(res, cache.get_or_compute("graphs", Json::object()));
  });

  server->Get("/api/markov", [&cache](const httplib::Request& req, httplib::Response& res) {
    Json body = Json::object();
    if (req.has_param("bound")) {
      const std::string text = req.get_param_value("bound");
      try {
        std::size_t used = 0;
        const long long bound = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        body["bound"] = bound;
      } catch (const std::exception&) {
        return reply_usage(res, "bound must be an integer");
      }
    }
    reply(res, cache.get_or_compute("markov", body));
  });

  server->Post(R"(/api/([a-z]+))", [&cache](const httplib::Request& req, httplib::Response& res) {
    const std::string endpoint = req.matches[1];
    Json body;
    try {
      body = req.body.empty() ? Json::object() : Json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
      return reply_usage(res, std::string("malformed JSON body: ") + e.what());
    }
    reply(res, cache.get_or_compute(endpoint, body));
  });

  server->Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  return server;
}

}  // namespace trigrid::api
