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

#include "cli.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "moqp/dnn_solver.hpp"
#include "moqp/errors.hpp"
#include "moqp/fixtures.hpp"
#include "moqp/pareto.hpp"
#include "moqp/problem_io.hpp"
#include "moqp/report.hpp"
#include "moqp/sampling.hpp"
#include "moqp/spectral.hpp"
#include "moqp/sweep.hpp"
#include "moqp/weights.hpp"

namespace moqp::cli {

namespace {

struct CommonOptions {
  std::string input;
  std::string output = "json";
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::optional<double> rank1_tol;
  std::uint64_t seed = 0;
};

struct Options {
  CommonOptions common;
  std::string weights;
  std::optional<std::size_t> count;
  std::optional<std::size_t> grid;
  std::size_t density = 1001;
};

void AddCommon(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--input", o.input,
                  "Problem document path, or builtin:ex51|ex52|portfolio")
      ->required();
  sub->add_option("--output", o.output, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--tol", o.tol, "Relative stopping tolerance (eps_rel)");
  sub->add_option("--max-iter", o.max_iter, "Iteration budget per solve");
  sub->add_option("--rank1-tol", o.rank1_tol, "Rank-1 gap accepted as exact");
  sub->add_option("--seed", o.seed, "Seed for weight draws and sampling");
}

SolverConfig MakeConfig(const CommonOptions& o) {
  SolverConfig cfg;
  if (o.tol) cfg.eps_rel = *o.tol;
  if (o.max_iter) cfg.max_iter = *o.max_iter;
  if (o.rank1_tol) cfg.rank1_tol = *o.rank1_tol;
  cfg.Validate();
  return cfg;
}

WeightVector ParseWeights(const std::string& text, std::size_t p,
                          std::ostream& err) {
  Vector values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (item.empty() || used != item.size()) {
      throw InputError("--weights: cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.size() != p) {
    throw InputError("--weights: expected " + std::to_string(p) +
                     " values, got " + std::to_string(values.size()));
  }
  WeightVector w(std::move(values));
  if (w.warning()) err << "warning: " << *w.warning() << "\n";
  return w;
}

void EmitWarnings(const MoqpInstance& inst, std::ostream& err) {
  for (const std::string& w : inst.Warnings()) err << "warning: " << w << "\n";
}

Json WarningsJson(const MoqpInstance& inst) {
  Json arr = Json::array();
  for (const std::string& w : inst.Warnings()) arr.push_back(w);
  return arr;
}

std::vector<WeightVector> SweepWeights(const Options& o, std::size_t p) {
  if (o.count.has_value() == o.grid.has_value()) {
    throw InputError("exactly one of --count or --grid is required");
  }
  if (o.grid) {
    if (*o.grid < 1) throw InputError("--grid must be at least 1");
    return GenWeightsGrid(p, *o.grid);
  }
  WeightSampler sampler(o.common.seed);
  std::vector<WeightVector> out;
  out.reserve(*o.count);
  for (std::size_t k = 0; k < *o.count; ++k) out.push_back(sampler.Draw(p));
  return out;
}

int RunSolve(const Options& o, std::ostream& out, std::ostream& err) {
  const MoqpInstance inst = fixtures::ResolveInput(o.common.input);
  EmitWarnings(inst, err);
  const SolverConfig cfg = MakeConfig(o.common);
  const WeightVector w = ParseWeights(o.weights, inst.p(), err);
  const SweepRecord rec = SolveOne(inst, w, cfg);
  if (rec.error) {
    err << "error: " << *rec.error << "\n";
    return rec.error->starts_with(ToString(ErrorKind::kConvergence))
               ? kExitNoConvergence
               : kExitInput;
  }
  if (o.common.output == "csv") {
    out << CsvHeader(inst) << "\n" << CsvRow(rec, inst.n(), inst.p()) << "\n";
  } else {
    Json j;
    j["instance"] = inst.name();
    j["record"] = RecordToJson(rec);
    const FeasibilityResidual fr = ComputeFeasibilityResidual(inst, rec.result.x);
    j["feasibility"] = {{"equality", fr.equality}, {"negativity", fr.negativity}};
    j["weighted_value"] = WeightedObjective(inst, w, rec.result.x);
    j["warnings"] = WarningsJson(inst);
    out << j.dump(2) << "\n";
  }
  if (rec.result.status != SolveStatus::kConverged) {
    err << "error: solve ended with status " << ToString(rec.result.status)
        << " after " << rec.result.iterations << " iterations\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

int RunSweep(const Options& o, bool frontier_only, std::ostream& out,
             std::ostream& err) {
  const MoqpInstance inst = fixtures::ResolveInput(o.common.input);
  EmitWarnings(inst, err);
  const SolverConfig cfg = MakeConfig(o.common);
  const std::vector<WeightVector> weights = SweepWeights(o, inst.p());
  std::vector<SweepRecord> records = Sweep(inst, weights, cfg);
  for (const SweepRecord& r : records) {
    if (r.error) err << "warning: solve failed: " << *r.error << "\n";
  }
  std::size_t total = records.size();
  if (frontier_only) {
    std::vector<SweepRecord> kept;
    for (std::size_t k : FrontierIndices(records)) kept.push_back(records[k]);
    records = std::move(kept);
  }
  if (o.common.output == "csv") {
    out << RecordsToCsv(inst, records);
  } else {
    Json j = RecordsToJson(inst, records);
    j["solves"] = total;
    j["warnings"] = WarningsJson(inst);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int RunCheck(const Options& o, std::ostream& out, std::ostream& err) {
  const MoqpInstance inst = fixtures::ResolveInput(o.common.input);
  EmitWarnings(inst, err);
  Json objectives = Json::array();
  std::ostringstream csv;
  csv << "objective,label,convex,min_eigenvalue,eigenvalues\n";
  std::size_t nonconvex = 0;
  for (std::size_t i = 0; i < inst.p(); ++i) {
    const SpectralDecomp eig = SymEig(inst.q(i));
    const bool convex = IsConvex(inst.q(i));
    if (!convex) ++nonconvex;
    const std::string label =
        inst.objective_labels().empty() ? "F" + std::to_string(i + 1)
                                        : inst.objective_labels()[i];
    objectives.push_back({{"index", i + 1},
                          {"label", label},
                          {"eigenvalues", eig.eigenvalues},
                          {"min_eigenvalue", eig.eigenvalues.front()},
                          {"convex", convex}});
    csv << i + 1 << "," << label << "," << (convex ? "true" : "false") << ","
        << eig.eigenvalues.front() << ",";
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
      csv << (k ? ";" : "") << eig.eigenvalues[k];
    }
    csv << "\n";
  }
  if (o.common.output == "csv") {
    out << csv.str();
  } else {
    Json j;
    j["instance"] = inst.name();
    j["n"] = inst.n();
    j["m"] = inst.m();
    j["p"] = inst.p();
    j["objectives"] = std::move(objectives);
    j["nonconvex_count"] = nonconvex;
    j["warnings"] = WarningsJson(inst);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int RunOracle(const Options& o, std::ostream& out, std::ostream& err) {
  const MoqpInstance inst = fixtures::ResolveInput(o.common.input);
  EmitWarnings(inst, err);
  const WeightVector w = ParseWeights(o.weights, inst.p(), err);
  SamplingOptions sopts;
  sopts.seed = o.common.seed;
  const SampleCloud cloud = SampleFeasible(inst, o.density, sopts);
  const BruteMinResult best = BruteMin(inst, w, cloud);
  const Vector f = EvaluateObjectives(inst, best.x);
  if (o.common.output == "csv") {
    out << "index,value";
    for (std::size_t i = 0; i < inst.n(); ++i) out << ",x" << i + 1;
    for (std::size_t i = 0; i < inst.p(); ++i) out << ",F" << i + 1;
    out << "\n" << best.index << "," << best.value;
    for (double v : best.x) out << "," << v;
    for (double v : f) out << "," << v;
    out << "\n";
  } else {
    Json j;
    j["instance"] = inst.name();
    j["weights"] = w.values();
    j["density"] = o.density;
    j["cloud_size"] = cloud.size();
    j["index"] = best.index;
    j["value"] = best.value;
    j["x"] = best.x;
    j["per_objective"] = f;
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Weighted-sum DNN relaxation toolkit for multi-objective QPs",
               "moqp"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "Solve one weighted-sum scalarization");
  AddCommon(solve, o.common);
  solve->add_option("--weights", o.weights, "Comma-separated weights")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Solve over a set of weights");
  CLI::App* frontier =
      app.add_subcommand("frontier", "Sweep and keep the non-dominated exact records");
  for (CLI::App* sub : {sweep, frontier}) {
    AddCommon(sub, o.common);
    auto* count = sub->add_option("--count", o.count, "Random weight draws");
    auto* grid = sub->add_option("--grid", o.grid, "Simplex lattice resolution");
    count->excludes(grid);
  }

  CLI::App* check = app.add_subcommand("check", "Eigenvalue and convexity audit");
  AddCommon(check, o.common);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force minimum over a sample of the feasible set");
  AddCommon(oracle, o.common);
  oracle->add_option("--weights", o.weights, "Comma-separated weights")->required();
  oracle->add_option("--density", o.density, "Points per axis or total samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return kExitInput;
  }

  try {
    if (solve->parsed()) return RunSolve(o, out, err);
    if (sweep->parsed()) return RunSweep(o, false, out, err);
    if (frontier->parsed()) return RunSweep(o, true, out, err);
    if (check->parsed()) return RunCheck(o, out, err);
    return RunOracle(o, out, err);
  } catch (const ConvergenceError& e) {
    err << "error: " << ToString(e.kind()) << ": " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const Error& e) {
    err << "error: " << ToString(e.kind()) << ": " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace moqp::cli
