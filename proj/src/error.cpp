#include "posclass/error.hpp"

#include <filesystem>

namespace posclass {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateResidue: return "DuplicateResidue";
    case ErrorCode::BadWindowSum: return "BadWindowSum";
    case ErrorCode::PeriodMismatch: return "PeriodMismatch";
    case ErrorCode::EqualResidues: return "EqualResidues";
    case ErrorCode::NotZeroGrassmannian: return "NotZeroGrassmannian";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::RectangleOverflow: return "RectangleOverflow";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroGrassmannianLeaf: return "ZeroGrassmannianLeaf";
    case ErrorCode::NotBounded: return "NotBounded";
    case ErrorCode::FullSubset: return "FullSubset";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NormalizationFailed: return "NormalizationFailed";
    case ErrorCode::NotToric: return "NotToric";
    case ErrorCode::TooManyRows: return "TooManyRows";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::source_location where)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      location_(std::filesystem::path(where.file_name()).filename().string() +
                ":" + std::to_string(where.line())) {}

}  // namespace posclass
