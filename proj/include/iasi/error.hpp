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

#ifndef IASI_ERROR_HPP_
#define IASI_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace iasi {

// Stable numbering: these values are mirrored by iasi_status in iasi.h.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kParse = 2,
  kIo = 3,
  kInvalidToken = 4,
  kLoopEdge = 5,
  kUnknownEndpoint = 6,
  kDuplicateEdge = 7,
  kDuplicateVertex = 8,
  kParamOutOfRange = 9,
  kVertexCollision = 10,
  kNotSubgraph = 11,
  kMissingLabel = 12,
  kUnknownVertex = 13,
  kNotIasi = 14,
  kNotIndependent = 15,
  kCapacityExceeded = 16,
  kTooLarge = 17,
  kNegativeResult = 18,
  kInternal = 19,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace iasi

#endif  // IASI_ERROR_HPP_
