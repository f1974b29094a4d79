#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ldpcball {

/// Malformed input: code files, alist files, flag values.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds a desk-scale resource cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required, std::uint64_t allowed)
      : std::runtime_error(what + " (required " + std::to_string(required) + ", allowed " +
                           std::to_string(allowed) + ")"),
        required_(required),
        allowed_(allowed) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ldpcball
