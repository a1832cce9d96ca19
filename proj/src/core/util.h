// core/util.h

// Copyright 2026  The asrtk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRTK_CORE_UTIL_H_
#define ASRTK_CORE_UTIL_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace asrtk {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();

inline double LogAdd(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

std::vector<std::string> SplitWhitespace(const std::string &s);
std::vector<std::string> SplitChar(const std::string &s, char sep);
std::string JoinTokens(const std::vector<std::string> &tokens,
                       const std::string &sep = " ");

// Reads a whole file; throws Error(ASRTK_E_IO) on failure.
std::string ReadFile(const std::string &path);
// Reads a text file as lines (LF or CRLF, trailing newline optional).
std::vector<std::string> ReadLines(const std::string &path);
void WriteFile(const std::string &path, const std::string &content);

// Fixed-format float rendering for deterministic text outputs.
std::string FormatDouble(double v, const char *fmt);

}  // namespace asrtk

#endif  // ASRTK_CORE_UTIL_H_
