// Copyright 2026 The Cohpar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHPAR_ERROR_HPP
#define COHPAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cohpar {

enum class ErrorCode {
    InvalidArgument,   // contract violation (non-Hermitian input, bad wire index, ...)
    DimensionMismatch, // operand dimensions disagree
    ParseError,        // malformed JSON or schema violation
    BudgetExceeded,    // p(H) > tau(n) for some segment
    CapExceeded,       // simulation dimension above the wire cap
    VerifyFailed,      // verification mismatch (schedule/circuit fingerprints, ...)
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline Error invalid_argument(const std::string& what) {
    return Error(ErrorCode::InvalidArgument, what);
}
inline Error dimension_mismatch(const std::string& what) {
    return Error(ErrorCode::DimensionMismatch, what);
}
inline Error parse_error(const std::string& what) {
    return Error(ErrorCode::ParseError, what);
}

} // namespace cohpar

#endif
