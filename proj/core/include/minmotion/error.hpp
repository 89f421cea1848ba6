// Copyright 2026 The minmotion Authors
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

namespace minmotion {

enum class ErrorKind {
  kDivisionByZero,
  kPrecondition,   // caller passed arguments outside the operation's domain
  kDegenerate,     // geometrically degenerate input (zero curve, single point)
  kNotNormalized,  // curve must go through normalize_at_infinity first
  kInternal,       // a guaranteed postcondition failed, which indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void check_internal(bool condition, const char* what) {
  if (!condition) fail(ErrorKind::kInternal, std::string("internal error: ") + what);
}

}  // namespace minmotion
