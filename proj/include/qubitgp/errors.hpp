// Copyright 2026 the qubitgp authors
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

namespace qgp {

// Error categories; they map one-to-one onto the C API status codes.
enum class ErrorCode {
    invalid_argument = 1, // bad parameters or configuration
    domain = 2,           // function evaluated outside its domain
    numerical = 3,        // quadrature/integration failed to converge
    state = 4,            // density-matrix invariant violated
    io = 5,               // file write failure
    internal = 6,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
    throw Error(ErrorCode::invalid_argument, msg);
}
[[noreturn]] inline void throw_domain(const std::string& msg) {
    throw Error(ErrorCode::domain, msg);
}
[[noreturn]] inline void throw_numerical(const std::string& msg) {
    throw Error(ErrorCode::numerical, msg);
}
[[noreturn]] inline void throw_state(const std::string& msg) {
    throw Error(ErrorCode::state, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
    throw Error(ErrorCode::io, msg);
}

} // namespace qgp
