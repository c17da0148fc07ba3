// Copyright 2026 The siri-bandits Authors.
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

#ifndef SIRI_STATUS_HPP_
#define SIRI_STATUS_HPP_

#include <stdexcept>
#include <string>

namespace siri {

// Numeric values are shared with the C API (siri_status_t).
enum class ErrorCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kBudgetExhausted = 2,
  kUnknownArm = 3,
  kNoSamples = 4,
  kBudgetTooSmall = 5,
  kUnsupportedSpec = 6,
  kIo = 7,
  kInternal = 8,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::kInvalidArgument, message);
}

}  // namespace siri

#endif  // SIRI_STATUS_HPP_
