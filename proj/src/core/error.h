// core/error.h

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

#ifndef ASRTK_CORE_ERROR_H_
#define ASRTK_CORE_ERROR_H_

#include <stdexcept>
#include <string>

#include "asrtk/asrtk.h"

namespace asrtk {

// Domain error carrying the status code surfaced through the C API.
class Error : public std::runtime_error {
 public:
  Error(asrtk_status code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  asrtk_status code() const { return code_; }

 private:
  asrtk_status code_;
};

[[noreturn]] inline void Throw(asrtk_status code, const std::string &msg) {
  throw Error(code, msg);
}

}  // namespace asrtk

#endif  // ASRTK_CORE_ERROR_H_
