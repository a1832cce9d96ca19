// core/utf8.h

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

#ifndef ASRTK_CORE_UTF8_H_
#define ASRTK_CORE_UTF8_H_

#include <cstdint>
#include <string>
#include <vector>

namespace asrtk {

// Decodes UTF-8 into codepoints; invalid bytes throw Error(ASRTK_E_PARSE).
std::vector<uint32_t> Utf8Decode(const std::string &s);
std::string Utf8Encode(const std::vector<uint32_t> &cps);
std::string Utf8Encode(uint32_t cp);

// Canonical composition (NFC) covering the nine Indic blocks
// (U+0900..U+0D7F): nukta composites that NFC keeps decomposed, two-part
// vowel signs that NFC composes, and canonical reordering of the combining
// marks of those blocks. Codepoints outside the tables pass through.
std::string NormalizeNfc(const std::string &s);

}  // namespace asrtk

#endif  // ASRTK_CORE_UTF8_H_
