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

#include "moqp/report.hpp"

#include <cstdio>
#include <sstream>

#include "moqp/errors.hpp"

namespace moqp {

namespace {

Json MatrixRows(const SymMatrix& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.order(); ++i) rows.push_back(s.Row(i));
  return rows;
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Json RecordToJson(const SweepRecord& rec) {
  Json j;
  j["weights"] = rec.weight.values();
  j["status"] = rec.error ? std::string("error") : std::string(ToString(rec.result.status));
  if (rec.error) j["error"] = *rec.error;
  j["iterations"] = rec.result.iterations;
  j["objective"] = rec.result.objective;
  j["primal_residual"] = rec.result.primal_residual;
  j["dual_residual"] = rec.result.dual_residual;
  j["x"] = rec.result.x;
  j["X"] = MatrixRows(rec.result.big_x);
  j["rank1_gap"] = rec.result.rank1_gap;
  j["exact"] = rec.result.exact;
  j["per_objective"] = rec.per_objective;
  j["verdict"] = {{"kind", ToString(rec.verdict.kind)},
                  {"basis", rec.verdict.basis}};
  return j;
}

SweepRecord RecordFromJson(const Json& doc) {
  try {
    SweepRecord rec;
    rec.weight = WeightVector(doc.at("weights").get<Vector>());
    const std::string status = doc.at("status").get<std::string>();
    if (status == "error") {
      rec.error = doc.at("error").get<std::string>();
    } else {
      rec.result.status = SolveStatusFromString(status);
    }
    rec.result.iterations = doc.at("iterations").get<std::size_t>();
    rec.result.objective = doc.at("objective").get<double>();
    rec.result.primal_residual = doc.at("primal_residual").get<double>();
    rec.result.dual_residual = doc.at("dual_residual").get<double>();
    rec.result.x = doc.at("x").get<Vector>();
    rec.result.big_x = SymMatrix::FromRows(doc.at("X").get<std::vector<Vector>>());
    rec.result.rank1_gap = doc.at("rank1_gap").get<double>();
    rec.result.exact = doc.at("exact").get<bool>();
    rec.per_objective = doc.at("per_objective").get<Vector>();
    rec.verdict.kind =
        VerdictKindFromString(doc.at("verdict").at("kind").get<std::string>());
    rec.verdict.basis = doc.at("verdict").at("basis").get<std::string>();
    return rec;
  } catch (const Json::exception& e) {
    throw InputError(std::string("sweep record: ") + e.what());
  }
}

Json RecordsToJson(const MoqpInstance& inst,
                   const std::vector<SweepRecord>& records) {
  Json j;
  j["instance"] = inst.name();
  j["n"] = inst.n();
  j["p"] = inst.p();
  Json recs = Json::array();
  for (const SweepRecord& r : records) recs.push_back(RecordToJson(r));
  j["records"] = std::move(recs);
  return j;
}

std::string CsvHeader(const MoqpInstance& inst) {
  std::ostringstream os;
  for (std::size_t i = 0; i < inst.p(); ++i) os << "w" << i + 1 << ",";
  for (std::size_t i = 0; i < inst.n(); ++i) os << "x" << i + 1 << ",";
  for (std::size_t i = 0; i < inst.p(); ++i) os << "F" << i + 1 << ",";
  os << "rank1_gap,status,verdict";
  return os.str();
}

std::string CsvRow(const SweepRecord& rec, std::size_t n, std::size_t p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p; ++i) os << Num(rec.weight[i]) << ",";
  for (std::size_t i = 0; i < n; ++i) {
    os << (i < rec.result.x.size() ? Num(rec.result.x[i]) : "") << ",";
  }
  for (std::size_t i = 0; i < p; ++i) {
    os << (i < rec.per_objective.size() ? Num(rec.per_objective[i]) : "") << ",";
  }
  os << Num(rec.result.rank1_gap) << ","
     << (rec.error ? "error" : ToString(rec.result.status)) << ","
     << ToString(rec.verdict.kind);
  return os.str();
}

std::string RecordsToCsv(const MoqpInstance& inst,
                         const std::vector<SweepRecord>& records) {
  std::string out = CsvHeader(inst) + "\n";
  for (const SweepRecord& r : records) out += CsvRow(r, inst.n(), inst.p()) + "\n";
  return out;
}

}  // namespace moqp
