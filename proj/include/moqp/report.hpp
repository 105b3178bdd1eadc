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

#ifndef MOQP_REPORT_HPP_
#define MOQP_REPORT_HPP_

#include <string>
#include <vector>

#include "moqp/problem_io.hpp"
#include "moqp/sweep.hpp"

namespace moqp {

// JSON form of a record. Numbers are written with round-trip precision, so
// RecordFromJson(RecordToJson(r)) == r.
Json RecordToJson(const SweepRecord& rec);
SweepRecord RecordFromJson(const Json& doc);

// {"instance": ..., "records": [...]} plus optional extra top-level fields.
Json RecordsToJson(const MoqpInstance& inst,
                   const std::vector<SweepRecord>& records);

// Flattened table: w_1..w_p, x_1..x_n, F_1..F_p, rank1_gap, status, verdict.
std::string CsvHeader(const MoqpInstance& inst);
std::string CsvRow(const SweepRecord& rec, std::size_t n, std::size_t p);
std::string RecordsToCsv(const MoqpInstance& inst,
                         const std::vector<SweepRecord>& records);

}  // namespace moqp

#endif  // MOQP_REPORT_HPP_
