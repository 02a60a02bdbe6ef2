// Copyright 2026 The Isogenion Authors
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

#ifndef ISOGENION_ERROR_HPP
#define ISOGENION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isogenion {

enum class ErrorKind {
  NotPrime,
  BoundExceeded,
  DivisionByZero,
  FieldMismatch,
  CurveMismatch,
  SingularCurve,
  NoSuchTwist,
  WrongOrder,
  NotRational,
  ClassMismatch,
  UnsupportedLevel,
  NotAnIdeal,
  OrderMismatch,
  NotMaximalAtPrime,
  NoCurveWithTrace,
  NotOnSurface,
  NotImaginaryQuadratic,
  OrdinaryOnly,
  NotInEndomorphismRing,
  NotIsogenous,
  TraceMismatch,
  PPartUnsupported,
  SupersingularUnsupported,
  SearchExhausted,
  InvalidArgument,
  DataError,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace isogenion

#endif  // ISOGENION_ERROR_HPP
