#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chevwidth {

enum class ErrorCode {
  DescriptorMismatch,
  NotAUnit,
  ZeroElement,
  NonzeroValuation,
  DivisionByZero,
  NotEuclidean,
  InvalidType,
  OppositeRoots,
  NoSuchEmbedding,
  UnsupportedRepForType,
  RepMismatch,
  MixedSigns,
  BudgetExceeded,
  UnsupportedRing,
  NotUnimodular,
  TooLargeForExhaustive,
  CoverageGap,
  ParseError,
  Overflow,
  InternalError,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI and the Python layer can report it by name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace chevwidth
