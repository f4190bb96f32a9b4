#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ugb {

enum class Errc {
  ParseError,
  ZeroDenominator,
  NonInvertibleDenominator,
  FieldMismatch,
  DivisionByZero,
  NotAStaircase,
  TooLarge,
  NonGenericWeight,
  MissingPredecessor,
  RankDeficient,
  InvalidBasis,
  DuplicatePoints,
  RankCollapse,
  SingularBasis,
  ClassDeficit,
  NotBinomial,
  NotZeroDimensional,
  Timeout,
  BadSubset,
  DimensionUnsupported,
  InvalidArgument,
  Internal,
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

}  // namespace ugb
