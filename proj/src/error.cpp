// Copyright 2026 The iasilab Authors
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

#include "iasi/error.hpp"

namespace iasi {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidToken: return "InvalidToken";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kDuplicateVertex: return "DuplicateVertex";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kVertexCollision: return "VertexCollision";
    case ErrorCode::kNotSubgraph: return "NotSubgraph";
    case ErrorCode::kMissingLabel: return "MissingLabel";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotIasi: return "NotIasi";
    case ErrorCode::kNotIndependent: return "NotIndependent";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNegativeResult: return "NegativeResult";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace iasi
