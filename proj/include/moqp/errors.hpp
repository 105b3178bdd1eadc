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

#ifndef MOQP_ERRORS_HPP_
#define MOQP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace moqp {

enum class ErrorKind {
  kInput,
  kConvergence,
  kRankDeficiency,
  kExtraction,
  kInfeasible,
  kEmptyRegion,
  kSize,
};

const char* ToString(ErrorKind kind);

// Base of every exception thrown by the library. `kind()` lets callers (the
// CLI in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ErrorKind::kInput, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::kConvergence, what) {}
};

class RankDeficiencyError : public Error {
 public:
  RankDeficiencyError(const std::string& what,
                      std::vector<std::size_t> constraint_indices)
      : Error(ErrorKind::kRankDeficiency, what),
        indices_(std::move(constraint_indices)) {}
  // Constraints whose Gram pivots collapsed during factorization.
  const std::vector<std::size_t>& constraint_indices() const noexcept {
    return indices_;
  }

 private:
  std::vector<std::size_t> indices_;
};

class ExtractionError : public Error {
 public:
  explicit ExtractionError(const std::string& what)
      : Error(ErrorKind::kExtraction, what) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what)
      : Error(ErrorKind::kInfeasible, what) {}
};

class EmptyRegionError : public Error {
 public:
  explicit EmptyRegionError(const std::string& what)
      : Error(ErrorKind::kEmptyRegion, what) {}
};

class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what)
      : Error(ErrorKind::kSize, what) {}
};

}  // namespace moqp

#endif  // MOQP_ERRORS_HPP_
