#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bmg {

/// Malformed input: unknown ids, parse failures, violated preconditions on
/// the data itself, or a desk-scale bound that was exceeded.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a graph does not admit the requested explanation. Carries a
/// machine-readable reason and, when available, the vertex subset whose
/// Aho graph was connected.
class NotExplainableError : public std::runtime_error {
 public:
  NotExplainableError(std::string reason, std::vector<std::string> certificate,
                      const std::string& message)
      : std::runtime_error(message),
        reason_(std::move(reason)),
        certificate_(std::move(certificate)) {}

  const std::string& reason() const noexcept { return reason_; }
  const std::vector<std::string>& certificate() const noexcept {
    return certificate_;
  }

 private:
  std::string reason_;
  std::vector<std::string> certificate_;
};

}  // namespace bmg
