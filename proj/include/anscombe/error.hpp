#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anscombe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe a well-formed voter matrix or opinion vector.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based source line, or 0 when the input did not come from a file.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Arguments outside an operation's documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Problem size beyond what an exhaustive or exact routine is allowed to attempt.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace anscombe
