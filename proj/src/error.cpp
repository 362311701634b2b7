#include "frl/error.hpp"

namespace frl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::UnsupportedDimension: return "unsupported-dimension";
    case ErrorKind::DivergentPeriod: return "divergent-period";
    case ErrorKind::NotPrimitive: return "not-primitive";
    case ErrorKind::NoSpanningTree: return "no-spanning-tree";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace frl
