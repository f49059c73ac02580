// Copyright 2026 The qtcluster Authors
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

namespace qtcluster {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain of an operation (bad Dynkin label, vertex not in
/// the quiver, frozen mutation direction, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An internal law that must always hold was violated. Seeing one of these
/// means a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace qtcluster
