#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace farey {

enum class ErrorCode {
  NotAVertex,
  LevelMismatch,
  Unsupported,
  NonIntegral,
  ResourceLimit,
  UnknownVertex,
  NotPrime,
  EqualVertices,
  WrongLevel,
  NoMatch,
  NoSector,
  DisconnectedBoundary,
  UnpairedEdge,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; code() identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace farey
