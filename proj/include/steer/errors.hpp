// Copyright 2026 The steerlab Authors
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

namespace steer {

/// Base of every error raised by the library.
class SteerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reconstructed density operator has a negative eigenvalue.
class NotAState : public SteerError {
 public:
  NotAState(const std::string& what, double min_eigenvalue)
      : SteerError(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

class DegenerateOutcome : public SteerError {
 public:
  using SteerError::SteerError;
};

class AliceBlochUnit : public SteerError {
 public:
  using SteerError::SteerError;
};

class DegenerateEllipsoid : public SteerError {
 public:
  using SteerError::SteerError;
};

/// Argument outside the supported branch of an elliptic integral.
class DomainError : public SteerError {
 public:
  using SteerError::SteerError;
};

/// A rejection-sampling density exceeded its declared bound.
class BoundViolated : public SteerError {
 public:
  using SteerError::SteerError;
};

class SingularT : public SteerError {
 public:
  using SteerError::SteerError;
};

class OrderingViolated : public SteerError {
 public:
  using SteerError::SteerError;
};

class NonRealResult : public SteerError {
 public:
  using SteerError::SteerError;
};

class NotInModelRegion : public SteerError {
 public:
  using SteerError::SteerError;
};

class NotOnBoundary : public SteerError {
 public:
  using SteerError::SteerError;
};

}  // namespace steer
