#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trigrid {

// Base class for every error the engine reports. `code` is a stable,
// machine-readable identifier used in JSON error payloads.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("parse_error", "line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Graph failed a structural check. Holds one entry per violated condition.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> problems)
      : Error("validation_error", join(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  static std::string join(const std::vector<std::string>& problems) {
    std::string out;
    for (const auto& p : problems) {
      if (!out.empty()) out += "; ";
      out += p;
    }
    return out;
  }
  std::vector<std::string> problems_;
};

// A mathematically well-posed request whose answer is "no", e.g. a point on a
// degeneracy wall or a non-integral slope.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller asked for something outside the supported envelope.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("usage_error", message) {}
};

}  // namespace trigrid
