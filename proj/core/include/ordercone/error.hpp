#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordercone {

/// Domain error categories. Each maps to a named invariant or precondition
/// so that front ends can report which check failed.
enum class Errc {
  DimensionMismatch,
  EmptyInput,
  NotPointed,
  NotGenerating,
  InconsistentRepresentation,
  CapExceeded,
  NotPervasive,
  NotAtom,
  NotPositive,
  NoDecomposition,
  NotABand,
  PreconditionViolated,
  NotDirectSum,
  NotMember,
  NotInC,
  ParseError,
  UnknownBuiltin,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ordercone
