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

#include "unrest/error.h"

namespace unrest {

std::string_view ErrcName(Errc code) {
  switch (code) {
    case Errc::kIo: return "E-IO";
    case Errc::kParse: return "E-PARSE";
    case Errc::kValidation: return "E-VALIDATION";
    case Errc::kSchema: return "E-SCHEMA";
    case Errc::kInvariant: return "E-INVARIANT";
  }
  return "E-UNKNOWN";
}

int ExitCodeFor(Errc code) { return code == Errc::kInvariant ? 2 : 1; }

}  // namespace unrest
