#ifndef ILAT_ERROR_HPP
#define ILAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ilat {

enum class ErrorCode {
  EmptyInput,
  CapExceeded,
  NotAPartialOrder,
  NotALattice,
  NotInvolutive,
  NotAntitone,
  NotPseudoKleene,
  BrouwerAxiomFails,
  SizeMismatch,
  MissingBound,
  TrivialSummand,
  ForbiddenTop,
  NotACongruence,
  CharacterizationMismatch,
  NoExtension,
  TheoremViolated,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// All validation and verification failures are reported through this type.
/// `code` identifies the violated precondition or axiom, `what()` carries the
/// witness (which elements, which axiom instance).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ilat

#endif  // ILAT_ERROR_HPP
