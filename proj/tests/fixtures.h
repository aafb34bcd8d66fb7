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

#ifndef UNREST_TESTS_FIXTURES_H_
#define UNREST_TESTS_FIXTURES_H_

#include <random>
#include <vector>

#include "unrest/models.h"

namespace unrest::fixture {

struct Planted {
  Rows rows;
  std::vector<int> labels;
  size_t informative = 0;
};

// One feature shifted by `separation` standard deviations between classes,
// the rest pure noise; about 30% positives.
inline Planted PlantedMatrix(std::uint64_t seed, size_t n = 350, size_t dim = 7,
                             size_t informative = 0, double separation = 2.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution positive(0.3);
  Planted p;
  p.informative = informative;
  for (size_t i = 0; i < n; ++i) {
    const int y = positive(rng) ? 1 : 0;
    std::vector<double> row(dim);
    for (size_t j = 0; j < dim; ++j) row[j] = normal(rng) * (1.0 + j) + 3.0 * j;
    row[informative] += separation * (1.0 + informative) * y;
    p.rows.push_back(std::move(row));
    p.labels.push_back(y);
  }
  return p;
}

}  // namespace unrest::fixture

#endif  // UNREST_TESTS_FIXTURES_H_
