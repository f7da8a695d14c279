// Copyright 2026 The NMP Authors.
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

#ifndef NMP_ERROR_H_
#define NMP_ERROR_H_

#include <stdexcept>
#include <string>

namespace nmp {

enum class ErrorCode {
  kFormat,              // malformed input file
  kInvalidArgument,     // a documented precondition does not hold
  kResourceExhausted,   // retry budget used up
  kDomain,              // the algorithm cannot proceed on this instance
  kInternal,            // broken invariant; always a bug
};

// All library failures are reported through this type. `code()` lets callers
// (the CLI in particular) map failures to exit statuses without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void Require(bool condition, const std::string& message) {
  if (!condition) Fail(ErrorCode::kInvalidArgument, message);
}

inline void Ensure(bool condition, const std::string& message) {
  if (!condition) Fail(ErrorCode::kInternal, message);
}

}  // namespace nmp

#endif  // NMP_ERROR_H_
