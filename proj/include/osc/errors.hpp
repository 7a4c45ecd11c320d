#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace osc {

// Every failure carries a short machine-readable code (stable across the CLI
// and the library) plus a human message with context.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace osc
