// Copyright 2026 The gtrs Authors
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

namespace gtrs {

// Base of every error raised by the library. Callers that only care about
// "the solve did not go through" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance document.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// The constraint Hessian is zero, so g is affine.
class LinearConstraint : public Error {
 public:
  using Error::Error;
};

// Neither a definite combination of (A, B) exists nor are both matrices
// already diagonal.
class NotSD : public Error {
 public:
  using Error::Error;
};

// A free coordinate (zero constraint curvature) has zero objective curvature
// but a nonzero linear term, so the stationarity system does not fix it.
class SingularFreeBlock : public Error {
 public:
  using Error::Error;
};

class PoleEvaluation : public Error {
 public:
  using Error::Error;
};

// LICQ fails: the constraint gradient vanishes.
class ZeroGradient : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

// Internal consistency checks that should never fire on exact arithmetic.
// Each one indicates a numerical fault and is surfaced, never swallowed.
class InternalAssertion : public Error {
 public:
  using Error::Error;
};

class CountBoundViolated : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};

class PairingViolation : public InternalAssertion {
 public:
  using InternalAssertion::InternalAssertion;
};

}  // namespace gtrs
