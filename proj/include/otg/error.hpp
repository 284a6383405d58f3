#pragma once

#include <stdexcept>
#include <string>

namespace otg {

enum class ErrorKind {
  invalid_argument,
  verification_failed,
  capacity_exceeded,
  parse_error,
  internal,
};

// Every failure raised by the library carries one of the kinds above; the C
// layer maps them onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::invalid_argument, what);
}

}  // namespace otg
