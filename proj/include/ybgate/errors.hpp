// Copyright 2026 The ybgate Authors
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

namespace ybgate {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Determinant magnitude fell below the inversion threshold.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The matrix exponential could not be evaluated (non-finite input or
/// runaway scaling).
class NonConvergence : public Error {
 public:
  using Error::Error;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

/// q = 0 has no inverse in the eight-vertex ansatz.
class ZeroDeformation : public Error {
 public:
  using Error::Error;
};

class NonUnitAxis : public Error {
 public:
  using Error::Error;
};

class NonUnitaryGate : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace ybgate
