// Copyright 2026 The spinlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spinlab {

enum class ErrorCode {
  InvalidDimension,
  DimensionMismatch,
  NotUnit,
  NotOrthogonal,
  DegenerateInput,
  Unsupported,
  BasisMismatch,
  ZeroLocus,
  ConventionViolation,
  NumericalInvertibility,
  Precondition,
  Io,
  Usage,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the category without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension: return "invalid-dimension";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NotUnit: return "not-unit";
    case ErrorCode::NotOrthogonal: return "not-orthogonal";
    case ErrorCode::DegenerateInput: return "degenerate-input";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::BasisMismatch: return "basis-mismatch";
    case ErrorCode::ZeroLocus: return "zero-locus";
    case ErrorCode::ConventionViolation: return "convention-violation";
    case ErrorCode::NumericalInvertibility: return "numerical-invertibility";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Io: return "io";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace spinlab
