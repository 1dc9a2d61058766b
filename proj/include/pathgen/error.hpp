// Copyright 2026 The Pathgen Authors
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

#ifndef PATHGEN_ERROR_HPP_
#define PATHGEN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathgen {

enum class ErrorCode {
  kMalformedDocument,
  kDuplicateId,
  kUnknownNode,
  kMissingStart,
  kMissingEnds,
  kInvalidModel,
  kParallelEdgesPresent,
  kInvalidCombination,
  kResourceLimitExceeded,
  kInvalidTestSet,
  kEmptyTestSet,
  kInvalidWeights,
  kEmptyInput,
  kInfeasibleParams,
  kInvalidArgument,
  kNoValidCandidate,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument: return "malformed-document";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kUnknownNode: return "unknown-node";
    case ErrorCode::kMissingStart: return "missing-start";
    case ErrorCode::kMissingEnds: return "missing-ends";
    case ErrorCode::kInvalidModel: return "invalid-model";
    case ErrorCode::kParallelEdgesPresent: return "parallel-edges-present";
    case ErrorCode::kInvalidCombination: return "invalid-combination";
    case ErrorCode::kResourceLimitExceeded: return "resource-limit-exceeded";
    case ErrorCode::kInvalidTestSet: return "invalid-test-set";
    case ErrorCode::kEmptyTestSet: return "empty-test-set";
    case ErrorCode::kInvalidWeights: return "invalid-weights";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kInfeasibleParams: return "infeasible-params";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNoValidCandidate: return "no-valid-candidate";
  }
  return "unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathgen

#endif  // PATHGEN_ERROR_HPP_
