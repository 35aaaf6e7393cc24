#pragma once

#include <stdexcept>
#include <string>

namespace famalg {

/// Library-wide exception. `code` is a stable machine-readable tag
/// (e.g. "AssociativityViolation", "MissingProduct", "SyntaxError");
/// the what() string carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

} // namespace famalg
