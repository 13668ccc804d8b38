#pragma once

#include <stdexcept>
#include <string>

namespace veechdeg {

enum class ErrorCode {
  NotAPermutation,
  NotConnected,
  InternalInconsistency,
  NonIntegralIntersection,
  NonExactDivision,
  ZeroPolynomial,
  NoRealRoot,
  IntervalAmbiguous,
  InvalidStratum,
  ParamsTooSmall,
  GenusTooSmall,
  NotPseudoAnosov,
  DegreeMismatch,
  CurvesDoNotGenerate,
  SpinUndefined,
  NoConePoint,
  SearchExhausted,
  UnreachableCombination,
  InvalidArgument,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NonIntegralIntersection: return "NonIntegralIntersection";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::IntervalAmbiguous: return "IntervalAmbiguous";
    case ErrorCode::InvalidStratum: return "InvalidStratum";
    case ErrorCode::ParamsTooSmall: return "ParamsTooSmall";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::NotPseudoAnosov: return "NotPseudoAnosov";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CurvesDoNotGenerate: return "CurvesDoNotGenerate";
    case ErrorCode::SpinUndefined: return "SpinUndefined";
    case ErrorCode::NoConePoint: return "NoConePoint";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::UnreachableCombination: return "UnreachableCombination";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(veechdeg::to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace veechdeg
