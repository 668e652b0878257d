#pragma once

#include <stdexcept>
#include <string>

namespace coniccurv {

enum class ErrorCode {
  CoincidentPoints,
  IdenticalLines,
  DegenerateConfiguration,
  TooFewPoints,
  DegenerateBisector,
  DegenerateTriangle,
  NonConvexConfiguration,
  ImproperApex,
  ZeroChordArea,
  ZeroSpeed,
  SingularSystem,
  SingularPoint,
  NonPositiveNorm,
  TooFewSamples,
  AllDegenerate,
  MalformedInput,
};

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coniccurv
