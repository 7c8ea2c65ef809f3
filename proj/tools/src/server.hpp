#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "api.hpp"

namespace httplib {
class Server;
}

namespace trigrid::api {

// Append-only response cache shared by request handlers.
class ResponseCache {
 public:
  Response get_or_compute(const std::string& endpoint, const Json& request);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, Response> entries_;
};

// Server with every /api route registered against `cache`.
std::unique_ptr<httplib::Server> make_server(ResponseCache& cache);

}  // namespace trigrid::api
