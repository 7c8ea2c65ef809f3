#pragma once

#include <optional>
#include <string>

#include "api.hpp"

namespace trigrid::api {

// Human-readable summary of a response document, when the command has one.
std::optional<std::string> text_view(const std::string& command, const Json& doc);

}  // namespace trigrid::api
