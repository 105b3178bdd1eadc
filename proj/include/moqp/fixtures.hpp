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

#ifndef MOQP_FIXTURES_HPP_
#define MOQP_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "moqp/problem.hpp"

namespace moqp::fixtures {

// "ex51", "ex52", "portfolio"
const std::vector<std::string>& Names();

// Embedded copy of data/<name>.json. Throws InputError for unknown names.
std::string_view Document(std::string_view name);
MoqpInstance Load(std::string_view name);

// "builtin:<name>" selects an embedded fixture; anything else is a file path.
MoqpInstance ResolveInput(const std::string& spec);

}  // namespace moqp::fixtures

#endif  // MOQP_FIXTURES_HPP_
