#include "smallcover/error.hpp"

namespace smallcover {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DanglingFacet: return "DanglingFacet";
    case ErrorCode::BadRidge: return "BadRidge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::DimensionTooLow: return "DimensionTooLow";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::InvalidCharFunc: return "InvalidCharFunc";
    case ErrorCode::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorCode::RankDefect: return "RankDefect";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace smallcover
