#pragma once

#include <stdexcept>
#include <string>

namespace gkit {

enum class ErrorKind {
  DegreeOutOfRange,
  EvenSelfPair,
  AlreadyDoubled,
  AlreadyExtended,
  InvalidQuiver,
  QuiverMismatch,
  UnknownArrow,
  NotInCommutatorSpace,
  DegreeMismatch,
  MasterEquationFails,
  NotCyclicallySymmetric,
  RoundTripMismatch,
  PreconditionFailed,
  NotCommutatorSum,
  NotACocycle,
  WindowNotRepresentable,
  WindowTooNarrow,
  NotMinimal,
  StasheffFails,
  ShapeMismatch,
  SyntaxError,
  NonCyclicTerm,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace gkit
