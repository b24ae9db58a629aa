// Copyright 2026 The erpg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace erpg {

enum class ErrorCode {
  NonPrime,
  TooLarge,
  DivisionByZero,
  OddDegree,
  OddCharacteristic,
  EvenCharacteristic,
  NotInSubfield,
  SingularMatrix,
  Degenerate2x2,
  NotOddSquare,
  WrongResidue,
  NotAdditive,
  NotOddPower,
  NoValidLambda,
  NotEven,
  VertexOutOfRange,
  NotIndependentInput,
  UnsupportedFormat,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::Degenerate2x2: return "Degenerate2x2";
    case ErrorCode::NotOddSquare: return "NotOddSquare";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::NotAdditive: return "NotAdditive";
    case ErrorCode::NotOddPower: return "NotOddPower";
    case ErrorCode::NoValidLambda: return "NoValidLambda";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NotIndependentInput: return "NotIndependentInput";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace erpg
