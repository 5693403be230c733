#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace belief {

enum class ErrorKind {
  // input / construction errors
  InvalidFrame,
  InvalidSubset,
  NegativeMass,
  SumNotOne,
  DuplicateSubset,
  FrameMismatch,
  EmptyInput,
  InvalidArgument,
  ParseError,
  // transform / rule failures
  NotAValidTransform,
  NotAMass,
  DogmaticMass,
  TotalConflict,
  TermExplosion,
  NotSeparable,
  EmptyGroups,
  EmptyFocalInGroup,
  EmptyFocal,
  NotSingleton,
};

std::string_view to_string(ErrorKind kind) noexcept;

// True for failures raised by a combination rule on otherwise valid input.
bool is_rule_failure(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace belief
