// Copyright 2026 The softabs Authors.
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

#ifndef SOFTABS_ERRORS_H_
#define SOFTABS_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace softabs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value does not belong to the carrier it was used with.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed descriptor, table, or file. `location` is a JSON pointer when the
// input came from JSON, empty otherwise.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message, std::string location = "")
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// An operation was called outside its documented precondition (empty input,
// missing adjoint, exceeded budget, uncertified mapping, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace softabs

#endif  // SOFTABS_ERRORS_H_
