// Copyright 2026 The lsl Authors
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

#include "lsl/error.hpp"

namespace lsl {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kOrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::kNotSubmodule: return "NotSubmodule";
    case ErrorCode::kRandomnessExhausted: return "RandomnessExhausted";
    case ErrorCode::kIncompleteRegistry: return "IncompleteRegistry";
    case ErrorCode::kSplitBudgetExhausted: return "SplitBudgetExhausted";
    case ErrorCode::kCoverLiftFailed: return "CoverLiftFailed";
    case ErrorCode::kIngestion: return "Ingestion";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lsl
