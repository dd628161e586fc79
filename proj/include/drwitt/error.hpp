// Copyright 2026 The drwitt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace drw {

enum class ErrorKind {
  NonComplex,
  DepthCap,
  LengthMismatch,
  LengthUnderflow,
  TorsionCoefficients,
  NonQuasiHomogeneous,
  UnsupportedBaseChange,
  UnsupportedKind,
  PrecisionExhausted,
  InexactDivision,
  UnitEnumerationCap,
  NonInjectiveTransitions,
  HomSetTooLarge,
  DegenerationFailed,
  NotLocalType,
  ParseError,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonComplex: return "NonComplex";
    case ErrorKind::DepthCap: return "DepthCap";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::LengthUnderflow: return "LengthUnderflow";
    case ErrorKind::TorsionCoefficients: return "TorsionCoefficients";
    case ErrorKind::NonQuasiHomogeneous: return "NonQuasiHomogeneous";
    case ErrorKind::UnsupportedBaseChange: return "UnsupportedBaseChange";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::UnitEnumerationCap: return "UnitEnumerationCap";
    case ErrorKind::NonInjectiveTransitions: return "NonInjectiveTransitions";
    case ErrorKind::HomSetTooLarge: return "HomSetTooLarge";
    case ErrorKind::DegenerationFailed: return "DegenerationFailed";
    case ErrorKind::NotLocalType: return "NotLocalType";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace drw
