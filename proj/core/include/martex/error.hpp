#pragma once

#include <stdexcept>
#include <string>

namespace martex {

// All domain errors carry a short machine-readable code ("unknown-x",
// "not-1-erased", "spread-violation", ...) next to the human message so the
// CLI can map them onto stable exit codes and report fields.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace martex
