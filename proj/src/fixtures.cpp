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

#include "moqp/fixtures.hpp"

#include "moqp/errors.hpp"
#include "moqp/problem_io.hpp"

namespace moqp::fixtures {

namespace detail {
extern const std::string_view k_ex51;
extern const std::string_view k_ex52;
extern const std::string_view k_portfolio;
}  // namespace detail

namespace {
constexpr std::string_view kBuiltinPrefix = "builtin:";
}  // namespace

const std::vector<std::string>& Names() {
  static const std::vector<std::string> names = {"ex51", "ex52", "portfolio"};
  return names;
}

std::string_view Document(std::string_view name) {
  if (name == "ex51") return detail::k_ex51;
  if (name == "ex52") return detail::k_ex52;
  if (name == "portfolio") return detail::k_portfolio;
  throw InputError("unknown builtin fixture '" + std::string(name) + "'");
}

MoqpInstance Load(std::string_view name) { return LoadInstance(Document(name)); }

MoqpInstance ResolveInput(const std::string& spec) {
  if (spec.starts_with(kBuiltinPrefix)) {
    return Load(std::string_view(spec).substr(kBuiltinPrefix.size()));
  }
  return LoadInstanceFile(spec);
}

}  // namespace moqp::fixtures
