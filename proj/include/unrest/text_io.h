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

#ifndef UNREST_TEXT_IO_H_
#define UNREST_TEXT_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace unrest {

// Reads a whole file; throws Errc::kIo when it cannot be opened.
std::string ReadFile(const std::string &path);

// Lines without trailing '\r'.
std::vector<std::string> ReadLines(const std::string &path);

// Writes atomically enough for our purposes: truncate + write + check.
void WriteFile(const std::string &path, std::string_view contents);

// Splits a simple CSV line (no quoting) and trims surrounding blanks.
std::vector<std::string> SplitCsv(std::string_view line);

std::string_view Trim(std::string_view s);

// "%.6f" with negative zero printed as 0.000000.
std::string Fixed6(double value);

}  // namespace unrest

#endif  // UNREST_TEXT_IO_H_
