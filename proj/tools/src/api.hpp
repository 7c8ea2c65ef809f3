#pragma once

#include <string>

#include "trigrid/serialize.hpp"

namespace trigrid::api {

using json::Json;

enum class Outcome { kOk = 0, kDomainError = 1, kUsageError = 2, kInternalError = 3 };

struct Response {
  Outcome outcome = Outcome::kOk;
  std::string body;
  std::string content_type = "application/json";
};

// Runs one request. `endpoint` is a command name such as "moduli"; the
// request is the JSON body (graph by builtin name or {"text": edge list}).
// Never throws; errors become error documents.
Response handle(const std::string& endpoint, const Json& request);

int exit_code(Outcome o);
int http_status(Outcome o);

}  // namespace trigrid::api
