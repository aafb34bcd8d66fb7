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

#include "unrest/regions.h"

namespace unrest {

const std::vector<Region> &UsStates() {
  static const std::vector<Region> kStates = {
      "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DE", "FL", "GA",
      "HI", "IA", "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD",
      "ME", "MI", "MN", "MO", "MS", "MT", "NC", "ND", "NE", "NH",
      "NJ", "NM", "NV", "NY", "OH", "OK", "OR", "PA", "RI", "SC",
      "SD", "TN", "TX", "UT", "VA", "VT", "WA", "WI", "WV", "WY"};
  return kStates;
}

}  // namespace unrest
