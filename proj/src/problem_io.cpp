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

#include "moqp/problem_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "moqp/errors.hpp"

namespace moqp {

namespace {

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& Field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw InputError(std::string("$.") + key + ": missing required field");
  }
  return *it;
}

std::size_t ReadCount(const Json& doc, const char* key) {
  const Json& v = Field(doc, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string("$.") + key + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

double ReadNumber(const Json& v, const std::string& path) {
  if (!v.is_number()) throw InputError(path + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(path + ": value is not finite");
  return d;
}

Vector ReadVector(const Json& v, std::size_t len, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  if (v.size() != len) {
    throw InputError(path + ": expected " + std::to_string(len) +
                     " entries, got " + std::to_string(v.size()));
  }
  Vector out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = ReadNumber(v[i], Index(path, i));
  return out;
}

std::vector<Vector> ReadRows(const Json& v, std::size_t rows, std::size_t cols,
                             const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array of rows");
  if (v.size() != rows) {
    throw InputError(path + ": expected " + std::to_string(rows) +
                     " rows, got " + std::to_string(v.size()));
  }
  std::vector<Vector> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    out.push_back(ReadVector(v[i], cols, Index(path, i)));
  }
  return out;
}

Json RowsToJson(const SymMatrix& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.order(); ++i) rows.push_back(s.Row(i));
  return rows;
}

}  // namespace

MoqpInstance InstanceFromJson(const Json& doc) {
  if (!doc.is_object()) throw InputError("$: expected a JSON object");
  const std::size_t n = ReadCount(doc, "n");
  const std::size_t m = ReadCount(doc, "m");
  const std::size_t p = ReadCount(doc, "p");
  if (n == 0) throw InputError("$.n: must be >= 1");
  if (p == 0) throw InputError("$.p: must be >= 1");

  const Json& qdoc = Field(doc, "Q");
  if (!qdoc.is_array() || qdoc.size() != p) {
    throw InputError("$.Q: expected " + std::to_string(p) + " matrices");
  }
  const Json& cdoc = Field(doc, "c");
  if (!cdoc.is_array() || cdoc.size() != p) {
    throw InputError("$.c: expected " + std::to_string(p) + " vectors");
  }

  std::vector<SymMatrix> q;
  std::vector<Vector> c;
  std::vector<AsymmetryNote> notes;
  for (std::size_t i = 0; i < p; ++i) {
    const std::string qpath = Index("$.Q", i);
    const std::vector<Vector> rows = ReadRows(qdoc[i], n, n, qpath);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = r + 1; s < n; ++s) {
        if (std::abs(rows[r][s] - rows[s][r]) > SymMatrix::kAsymmetryWarning) {
          notes.push_back({i, r, s, rows[r][s], rows[s][r]});
        }
      }
    }
    q.push_back(SymMatrix::FromRows(rows));
    c.push_back(ReadVector(cdoc[i], n, Index("$.c", i)));
  }

  const Json& adoc = Field(doc, "A");
  const Json& bdoc = Field(doc, "b");
  Matrix a = m == 0 ? Matrix(0, n) : Matrix::FromRows(ReadRows(adoc, m, n, "$.A"), n);
  if (m == 0 && (!adoc.is_array() || !adoc.empty())) {
    throw InputError("$.A: expected an empty array when m = 0");
  }
  if (bdoc.is_array() && bdoc.size() != m) {
    throw InputError("$.b: A has " + std::to_string(m) + " rows but b has " +
                     std::to_string(bdoc.size()) + " entries");
  }
  Vector b = ReadVector(bdoc, m, "$.b");

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw InputError("$.name: expected a string");
    name = it->get<std::string>();
  }
  std::vector<std::string> labels;
  if (auto it = doc.find("objective_labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != p) {
      throw InputError("$.objective_labels: expected " + std::to_string(p) +
                       " strings");
    }
    for (std::size_t i = 0; i < p; ++i) {
      if (!(*it)[i].is_string()) {
        throw InputError(Index("$.objective_labels", i) + ": expected a string");
      }
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  std::string provenance;
  if (auto it = doc.find("provenance"); it != doc.end()) {
    if (!it->is_string()) throw InputError("$.provenance: expected a string");
    provenance = it->get<std::string>();
  }

  return MoqpInstance(std::move(q), std::move(c), std::move(a), std::move(b),
                      std::move(name), std::move(labels), std::move(notes),
                      std::move(provenance));
}

MoqpInstance LoadInstance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("$: malformed JSON: ") + e.what());
  }
  return InstanceFromJson(doc);
}

MoqpInstance LoadInstanceFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open problem document " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadInstance(buf.str());
}

Json InstanceToJson(const MoqpInstance& inst) {
  Json doc;
  if (!inst.name().empty()) doc["name"] = inst.name();
  doc["n"] = inst.n();
  doc["m"] = inst.m();
  doc["p"] = inst.p();
  Json q = Json::array();
  for (const SymMatrix& qi : inst.q()) q.push_back(RowsToJson(qi));
  doc["Q"] = std::move(q);
  doc["c"] = inst.c();
  Json a = Json::array();
  for (std::size_t j = 0; j < inst.m(); ++j) {
    const auto row = inst.a().row(j);
    a.push_back(Vector(row.begin(), row.end()));
  }
  doc["A"] = std::move(a);
  doc["b"] = inst.b();
  if (!inst.objective_labels().empty()) {
    doc["objective_labels"] = inst.objective_labels();
  }
  if (!inst.provenance().empty()) doc["provenance"] = inst.provenance();
  return doc;
}

std::string SerializeInstance(const MoqpInstance& inst) {
  return InstanceToJson(inst).dump(2);
}

}  // namespace moqp
