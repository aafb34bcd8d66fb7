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

#ifndef UNREST_REGIONS_H_
#define UNREST_REGIONS_H_

#include <set>
#include <string>
#include <vector>

namespace unrest {

// Two-letter region code ("NY").
using Region = std::string;

// The 50 US state codes in lexicographic order.
const std::vector<Region> &UsStates();

using RegionSet = std::set<Region>;

inline RegionSet DefaultRegionSet() {
  return RegionSet(UsStates().begin(), UsStates().end());
}

}  // namespace unrest

#endif  // UNREST_REGIONS_H_
