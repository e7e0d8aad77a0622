// Copyright 2026 The eltqc authors
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

namespace eltqc {

enum class ErrorKind {
  NotHermitian,
  NotPSD,
  NonSquare,
  NegativeTime,
  DimensionMismatch,
  InvalidDensityMatrix,
  NotContraction,
  ShrinkNotAllowed,
  NonUnitGate,
  TooWide,
  WeightGridMismatch,
  EmptyFamily,
  GridMismatch,
  NotPadded,
  NotUnitary,
  BadConfig,
  IOFailure,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::ShrinkNotAllowed: return "ShrinkNotAllowed";
    case ErrorKind::NonUnitGate: return "NonUnitGate";
    case ErrorKind::TooWide: return "TooWide";
    case ErrorKind::WeightGridMismatch: return "WeightGridMismatch";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::GridMismatch: return "GridMismatch";
    case ErrorKind::NotPadded: return "NotPadded";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::IOFailure: return "IOFailure";
  }
  return "Unknown";
}

// Every failure in the library throws this type. The CLI maps BadConfig and
// IOFailure to exit code 2 and every other kind to exit code 3.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace eltqc
