#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smallcover {

enum class ErrorCode {
  // polytope
  NotSimple,
  DanglingFacet,
  BadRidge,
  TooSmall,
  BadParameter,
  BadDimension,
  BadIndex,
  DimensionTooLow,
  // charfunc
  WrongShape,
  ZeroColumn,
  InvalidCharFunc,
  NotUpperTriangular,
  // zhomology
  RankDefect,
  TooLarge,
  // classify
  Inconsistent,
  // io
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace smallcover
