/*
 * Copyright 2026 The ringcollatz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ringcollatz {

enum class Errc {
  invalid_argument,   // malformed input or violated precondition
  parse_error,        // text could not be parsed
  not_prime,
  reducible_modulus,
  char_zero,          // operation needs positive characteristic
  positive_char,      // operation needs characteristic zero
  infinite_valuation,
  precondition_failed,
  enumeration_unsupported,
  budget_exceeded,
  cap_exceeded,
  not_periodic,
  internal,           // a proven identity failed; indicates a bug
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ringcollatz
