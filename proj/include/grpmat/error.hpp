#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpmat {

enum class ErrorCode {
  MalformedFile,
  IdentityViolated,
  NotLatinSquare,
  NotAssociative,
  NoInverse,
  UnknownName,
  NotDerangedAtOne,
  UnsupportedOrder,
  SizeLimit,
  DiagonalTermInStrictMode,
  OrderTooLarge,
  LayoutMismatch,
  MixedContext,
  NotClosed,
  NotBijective,
  ScaleLimit,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grpmat
