// core/utf8.cc

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

#include "core/utf8.h"

#include <algorithm>
#include <unordered_map>

#include "core/error.h"

namespace asrtk {

std::vector<uint32_t> Utf8Decode(const std::string &s) {
  std::vector<uint32_t> out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = s[i];
    uint32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      Throw(ASRTK_E_PARSE, "invalid UTF-8 lead byte at offset " +
                               std::to_string(i));
    }
    if (i + len > s.size())
      Throw(ASRTK_E_PARSE, "truncated UTF-8 sequence at offset " +
                               std::to_string(i));
    for (size_t k = 1; k < len; ++k) {
      unsigned char b = s[i + k];
      if ((b & 0xC0) != 0x80)
        Throw(ASRTK_E_PARSE, "invalid UTF-8 continuation at offset " +
                                 std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string Utf8Encode(uint32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::string Utf8Encode(const std::vector<uint32_t> &cps) {
  std::string out;
  for (uint32_t cp : cps) out += Utf8Encode(cp);
  return out;
}

namespace {

// Canonical decompositions for the Indic blocks. Entries marked "excluded"
// are Unicode composition exclusions: NFC leaves them decomposed.
struct Decomp {
  uint32_t cp, first, second;
  bool excluded;
};

constexpr Decomp kDecomps[] = {
    // Devanagari nukta composites (all excluded)
    {0x0929, 0x0928, 0x093C, true}, {0x0931, 0x0930, 0x093C, true},
    {0x0934, 0x0933, 0x093C, true}, {0x0958, 0x0915, 0x093C, true},
    {0x0959, 0x0916, 0x093C, true}, {0x095A, 0x0917, 0x093C, true},
    {0x095B, 0x091C, 0x093C, true}, {0x095C, 0x0921, 0x093C, true},
    {0x095D, 0x0922, 0x093C, true}, {0x095E, 0x092B, 0x093C, true},
    {0x095F, 0x092F, 0x093C, true},
    // Bengali
    {0x09CB, 0x09C7, 0x09BE, false}, {0x09CC, 0x09C7, 0x09D7, false},
    {0x09DC, 0x09A1, 0x09BC, true},  {0x09DD, 0x09A2, 0x09BC, true},
    {0x09DF, 0x09AF, 0x09BC, true},
    // Gurmukhi (all excluded)
    {0x0A33, 0x0A32, 0x0A3C, true}, {0x0A36, 0x0A38, 0x0A3C, true},
    {0x0A59, 0x0A16, 0x0A3C, true}, {0x0A5A, 0x0A17, 0x0A3C, true},
    {0x0A5B, 0x0A1C, 0x0A3C, true}, {0x0A5E, 0x0A2B, 0x0A3C, true},
    // Oriya
    {0x0B48, 0x0B47, 0x0B56, false}, {0x0B4B, 0x0B47, 0x0B3E, false},
    {0x0B4C, 0x0B47, 0x0B57, false}, {0x0B5C, 0x0B21, 0x0B3C, true},
    {0x0B5D, 0x0B22, 0x0B3C, true},
    // Tamil
    {0x0B94, 0x0B92, 0x0BD7, false}, {0x0BCA, 0x0BC6, 0x0BBE, false},
    {0x0BCB, 0x0BC7, 0x0BBE, false}, {0x0BCC, 0x0BC6, 0x0BD7, false},
    // Telugu
    {0x0C48, 0x0C46, 0x0C56, false},
    // Kannada (0CCB decomposes recursively via 0CCA)
    {0x0CC0, 0x0CBF, 0x0CD5, false}, {0x0CC7, 0x0CC6, 0x0CD5, false},
    {0x0CC8, 0x0CC6, 0x0CD6, false}, {0x0CCA, 0x0CC6, 0x0CC2, false},
    {0x0CCB, 0x0CCA, 0x0CD5, false},
    // Malayalam
    {0x0D4A, 0x0D46, 0x0D3E, false}, {0x0D4B, 0x0D47, 0x0D3E, false},
    {0x0D4C, 0x0D46, 0x0D57, false},
};

int CombiningClass(uint32_t cp) {
  switch (cp) {
    case 0x093C: case 0x09BC: case 0x0A3C: case 0x0ABC:
    case 0x0B3C: case 0x0CBC:
      return 7;  // nukta
    case 0x094D: case 0x09CD: case 0x0A4D: case 0x0ACD: case 0x0B4D:
    case 0x0BCD: case 0x0C4D: case 0x0CCD: case 0x0D4D:
      return 9;  // virama
    case 0x0C55:
      return 84;
    case 0x0C56:
      return 91;
    case 0x0952:
      return 220;
    case 0x0951: case 0x0953: case 0x0954:
      return 230;
    default:
      return 0;
  }
}

const std::unordered_map<uint32_t, const Decomp *> &DecompMap() {
  static const auto *m = [] {
    auto *map = new std::unordered_map<uint32_t, const Decomp *>();
    for (const auto &d : kDecomps) (*map)[d.cp] = &d;
    return map;
  }();
  return *m;
}

const std::unordered_map<uint64_t, uint32_t> &ComposeMap() {
  static const auto *m = [] {
    auto *map = new std::unordered_map<uint64_t, uint32_t>();
    for (const auto &d : kDecomps) {
      if (d.excluded) continue;
      (*map)[(static_cast<uint64_t>(d.first) << 32) | d.second] = d.cp;
    }
    return map;
  }();
  return *m;
}

void DecomposeInto(uint32_t cp, std::vector<uint32_t> *out) {
  auto it = DecompMap().find(cp);
  if (it == DecompMap().end()) {
    out->push_back(cp);
    return;
  }
  DecomposeInto(it->second->first, out);
  DecomposeInto(it->second->second, out);
}

}  // namespace

std::string NormalizeNfc(const std::string &s) {
  std::vector<uint32_t> cps = Utf8Decode(s);

  std::vector<uint32_t> dec;
  dec.reserve(cps.size());
  for (uint32_t cp : cps) DecomposeInto(cp, &dec);

  // Canonical ordering: stable-sort runs of nonzero-ccc marks.
  for (size_t i = 1; i < dec.size(); ++i) {
    int cc = CombiningClass(dec[i]);
    if (cc == 0) continue;
    size_t j = i;
    while (j > 0 && CombiningClass(dec[j - 1]) > cc) {
      std::swap(dec[j - 1], dec[j]);
      --j;
    }
  }

  // Canonical composition (UAX #15): combine with the last starter unless a
  // preceding mark of equal or higher class blocks it.
  std::vector<uint32_t> out;
  out.reserve(dec.size());
  int last_starter = -1;
  int last_cc = -1;
  for (uint32_t cp : dec) {
    int cc = CombiningClass(cp);
    if (last_starter >= 0 && (last_cc < cc || last_cc == -1)) {
      uint64_t key =
          (static_cast<uint64_t>(out[last_starter]) << 32) | cp;
      auto it = ComposeMap().find(key);
      if (it != ComposeMap().end()) {
        out[last_starter] = it->second;
        continue;  // last_cc unchanged; cp consumed
      }
    }
    if (cc == 0) {
      last_starter = static_cast<int>(out.size());
      last_cc = -1;
    } else {
      last_cc = cc;
    }
    out.push_back(cp);
  }
  return Utf8Encode(out);
}

}  // namespace asrtk
