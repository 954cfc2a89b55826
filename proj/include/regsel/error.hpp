#pragma once

#include <stdexcept>
#include <string>

namespace regsel {

/// Engine error carrying a stable machine-readable code (used by the HTTP
/// service and CLI diagnostics).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace regsel
