#include "belief/error.hpp"

namespace belief {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::SumNotOne: return "SumNotOne";
    case ErrorKind::DuplicateSubset: return "DuplicateSubset";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAValidTransform: return "NotAValidTransform";
    case ErrorKind::NotAMass: return "NotAMass";
    case ErrorKind::DogmaticMass: return "DogmaticMass";
    case ErrorKind::TotalConflict: return "TotalConflict";
    case ErrorKind::TermExplosion: return "TermExplosion";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::EmptyGroups: return "EmptyGroups";
    case ErrorKind::EmptyFocalInGroup: return "EmptyFocalInGroup";
    case ErrorKind::EmptyFocal: return "EmptyFocal";
    case ErrorKind::NotSingleton: return "NotSingleton";
  }
  return "Unknown";
}

bool is_rule_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAValidTransform:
    case ErrorKind::NotAMass:
    case ErrorKind::DogmaticMass:
    case ErrorKind::TotalConflict:
    case ErrorKind::TermExplosion:
    case ErrorKind::NotSeparable:
    case ErrorKind::EmptyGroups:
    case ErrorKind::EmptyFocalInGroup:
      return true;
    default:
      return false;
  }
}

}  // namespace belief
