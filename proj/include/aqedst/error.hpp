// Copyright 2026 The aqedst Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace aqedst {

enum class errc {
  invalid_argument,
  size_limit,
  dimension_mismatch,
  verification_failed,
  budget_exceeded,
  schema_error,
  construction_bug,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid argument";
    case errc::size_limit: return "size limit";
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::verification_failed: return "verification failed";
    case errc::budget_exceeded: return "enumeration budget exceeded";
    case errc::schema_error: return "schema error";
    case errc::construction_bug: return "construction bug";
  }
  return "unknown";
}

/// Single exception type for the library; `code()` tells callers (and the
/// CLI exit-code mapping) which class of failure occurred.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace aqedst
