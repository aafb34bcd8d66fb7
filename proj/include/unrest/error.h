// Copyright 2026 The Unrest Forecast Authors.
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

#ifndef UNREST_ERROR_H_
#define UNREST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace unrest {

// Stable error categories. The name is printed as a prefix on stderr and the
// category decides the process exit code.
enum class Errc {
  kIo,          // unreadable or unwritable file
  kParse,       // malformed input text
  kValidation,  // well-formed input violating a documented constraint
  kSchema,      // incompatible inputs (dimensions, feature columns)
  kInvariant,   // internal consistency check failed
};

std::string_view ErrcName(Errc code);

// Exit code for a category: 2 for invariant violations, 1 otherwise.
int ExitCodeFor(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void Fail(Errc code, const std::string &message) {
  throw Error(code, message);
}

// Throws kInvariant when the condition does not hold.
inline void Check(bool condition, const std::string &message) {
  if (!condition) Fail(Errc::kInvariant, message);
}

}  // namespace unrest

#endif  // UNREST_ERROR_H_
