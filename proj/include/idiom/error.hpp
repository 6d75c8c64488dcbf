#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idiom {

/// Error kinds raised by the library. The names double as the error names
/// printed by the command-line tool.
enum class Errc {
  ParseError,
  InvalidInput,
  NotALattice,
  NoBounds,
  CycleDetected,
  ElementBelowBase,
  OutOfInterval,
  InvalidInterval,
  MixedLattices,
  NotBasic,
  NotTotal,
  NotInflator,
  NotNucleus,
  NotDivision,
  NotMorphism,
  SizeLimit,
  InvalidAllocation,
  InvalidAspect,
  NotInert,
  InvalidSeq,
  NotBasicOperator,
  NotPrime,
  GenerationFailed,
  InternalCheckFailed,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return to_string(code_); }

 private:
  Errc code_;
};

}  // namespace idiom
