// Copyright 2026 The ResolveKit Authors.
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

#ifndef RESOLVEKIT_ERROR_H_
#define RESOLVEKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace resolvekit {

// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kInvalidInput = 2,
  kInfeasible = 3,
  kNoResolvingSet = 4,
  kSizeCap = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input, out-of-domain argument, or arithmetic on UNREACHABLE.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorCode::kInvalidInput, what) {}
};

// No allocation satisfies f(k) <= alpha, even taking every node.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorCode::kInfeasible, what) {}
};

class NoResolvingSetError : public Error {
 public:
  explicit NoResolvingSetError(const std::string& what)
      : Error(ErrorCode::kNoResolvingSet, what) {}
};

// An exhaustive routine refused to run past its configured cap.
class SizeCapError : public Error {
 public:
  explicit SizeCapError(const std::string& what)
      : Error(ErrorCode::kSizeCap, what) {}
};

}  // namespace resolvekit

#endif  // RESOLVEKIT_ERROR_H_
