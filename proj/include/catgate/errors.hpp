// Copyright 2026 The catgate Authors
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

namespace catgate {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A grid does not cover the support a state or kernel needs.
class GridTooSmallError : public Error {
 public:
  using Error::Error;
};

/// Two wavefunctions that must share a grid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the supported range of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The sampling step cannot resolve the phase oscillation of the integrand.
class NyquistError : public Error {
 public:
  using Error::Error;
};

/// The homodyne outcome has (numerically) zero probability density.
class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

/// An iterative search failed to bracket or converge.
class NotConvergedError : public Error {
 public:
  using Error::Error;
};

/// A fit target is not reachable on the scanned curve.
class ValueOutOfRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace catgate
