#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frl {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  UnsupportedDimension,
  DivergentPeriod,
  NotPrimitive,
  NoSpanningTree,
  Capacity,
  NumericalFailure,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every domain failure in the library is reported through this type; the
/// kind drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frl
