#include "chevwidth/errors.hpp"

namespace chevwidth {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NonzeroValuation: return "NonzeroValuation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotEuclidean: return "NotEuclidean";
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::OppositeRoots: return "OppositeRoots";
    case ErrorCode::NoSuchEmbedding: return "NoSuchEmbedding";
    case ErrorCode::UnsupportedRepForType: return "UnsupportedRepForType";
    case ErrorCode::RepMismatch: return "RepMismatch";
    case ErrorCode::MixedSigns: return "MixedSigns";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorCode::CoverageGap: return "CoverageGap";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace chevwidth
