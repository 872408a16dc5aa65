#pragma once

#include <stdexcept>
#include <string>

namespace lefcert {

enum class Err {
  EulerMismatch,
  BoundaryMismatch,
  Disconnected,
  EmptyCurveSet,
  HomologyInconsistent,
  IndexOutOfRange,
  DimensionMismatch,
  NonPrimitiveCurveClass,
  MissingHomologyData,
  MatrixNotSymplectic,
  InvalidCounts,
  ParityMismatch,
  NegativeBetti,
  UnknownInequalityId,
  ParameterOutOfRange,
  GenusTooSmall,
  NotSemistable,
  TrivialPencil,
  InvalidPartition,
  BaseSphereNoCover,
  FlagConflict,
  SchemaError,
  Overflow,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  Err code() const { return code_; }

  /// Message without the code prefix, for rewrapping with extra context.
  const std::string& message() const { return message_; }

 private:
  Err code_;
  std::string message_;
};

}  // namespace lefcert
