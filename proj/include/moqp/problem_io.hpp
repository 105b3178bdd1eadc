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

#ifndef MOQP_PROBLEM_IO_HPP_
#define MOQP_PROBLEM_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "moqp/problem.hpp"

namespace moqp {

using Json = nlohmann::ordered_json;

// Problem document:
//   {"name": str?, "n": int, "m": int, "p": int,
//    "Q": [p matrices as lists of rows], "c": [p vectors],
//    "A": [m rows], "b": [m values],
//    "objective_labels": [p strings]?, "provenance": str?}
// Errors are InputError with a JSON-path-like location ("$.Q[1][0][2]").
MoqpInstance InstanceFromJson(const Json& doc);
MoqpInstance LoadInstance(std::string_view text);
MoqpInstance LoadInstanceFile(const std::filesystem::path& path);

Json InstanceToJson(const MoqpInstance& inst);
std::string SerializeInstance(const MoqpInstance& inst);

}  // namespace moqp

#endif  // MOQP_PROBLEM_IO_HPP_
