// Copyright 2026 The qsci Authors
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

namespace qsci {

/// Failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
    kInvalidInput,  ///< malformed data or violated precondition
    kPostselection, ///< an ancilla outcome had vanishing probability
    kTolerance,     ///< a requested accuracy could not be reached
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

inline void require(bool condition, const std::string &message) {
    if (!condition) {
        throw Error(ErrorKind::kInvalidInput, message);
    }
}

} // namespace qsci
