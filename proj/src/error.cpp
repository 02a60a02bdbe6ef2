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

#include "isogenion/error.hpp"

namespace isogenion {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::NoSuchTwist: return "NoSuchTwist";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::UnsupportedLevel: return "UnsupportedLevel";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotMaximalAtPrime: return "NotMaximalAtPrime";
    case ErrorKind::NoCurveWithTrace: return "NoCurveWithTrace";
    case ErrorKind::NotOnSurface: return "NotOnSurface";
    case ErrorKind::NotImaginaryQuadratic: return "NotImaginaryQuadratic";
    case ErrorKind::OrdinaryOnly: return "OrdinaryOnly";
    case ErrorKind::NotInEndomorphismRing: return "NotInEndomorphismRing";
    case ErrorKind::NotIsogenous: return "NotIsogenous";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::PPartUnsupported: return "PPartUnsupported";
    case ErrorKind::SupersingularUnsupported: return "SupersingularUnsupported";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DataError: return "DataError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace isogenion
