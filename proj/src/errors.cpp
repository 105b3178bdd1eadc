// Copyright 2026 The moqp Authors
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

#include "moqp/errors.hpp"

namespace moqp {

const char* ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return "input-error";
    case ErrorKind::kConvergence:
      return "convergence-error";
    case ErrorKind::kRankDeficiency:
      return "rank-deficiency-error";
    case ErrorKind::kExtraction:
      return "extraction-error";
    case ErrorKind::kInfeasible:
      return "infeasible-error";
    case ErrorKind::kEmptyRegion:
      return "empty-region-error";
    case ErrorKind::kSize:
      return "size-error";
  }
  return "error";
}

}  // namespace moqp
