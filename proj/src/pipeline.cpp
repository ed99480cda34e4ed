// Copyright 2026 The csdopt Authors
//
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


#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include "csdopt/circuit.hpp"
#include "csdopt/cli.hpp"
#include "csdopt/errors.hpp"

namespace csdopt {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

/// Files created so far; removed unless commit() is called.
class ArtifactSet {
 public:
  ~ArtifactSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : paths_) std::filesystem::remove(p, ec);
  }
  void write(const std::filesystem::path& path, const std::string& body) {
    paths_.push_back(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << body;
    out.close();
    if (!out) throw IoError("write failed: " + path.string());
  }
  void commit() { committed_ = true; }

 private:
  std::vector<std::filesystem::path> paths_;
  bool committed_ = false;
};

}  // namespace

BranchChoice parse_branch_choice(std::string_view s) {
  if (s == "real") return BranchChoice::Real;
  if (s == "complex") return BranchChoice::Complex;
  if (s == "auto") return BranchChoice::Auto;
  throw std::invalid_argument("branch must be real, complex or auto");
}

Branch resolve_branch(BranchChoice choice, const UnitaryMatrix& u) {
  switch (choice) {
    case BranchChoice::Real:
      return Branch::Real;
    case BranchChoice::Complex:
      return Branch::Complex;
    case BranchChoice::Auto:
      break;
  }
  return u.is_real() ? Branch::Real : Branch::Complex;
}

PipelineOutput run_search(const UnitaryMatrix& input, const RunConfig& cfg) {
  PipelineReport r;
  r.original_dim = input.dim();
  const UnitaryMatrix u = expand_to_power_of_two(input);
  r.dim = u.dim();
  r.branch = resolve_branch(cfg.branch, u);

  AnnealConfig ac;
  ac.i_max = cfg.i_max;
  ac.j_max = cfg.j_max;
  ac.alpha = cfg.alpha;
  ac.seed = cfg.seed;
  ac.workers = cfg.workers;
  ac.branch = r.branch;
  ac.method = cfg.method;
  ac.validate();
  r.method = ac.resolved_method();

  SearchResult s = parallel_search(u, ac);
  r.best_worker = s.best_worker;
  r.no_optimisation = s.workers.front().unoptimised;
  const WorkerResult* sel = &s.workers.front();
  for (const auto& w : s.workers)
    if (w.after_qubit_selection.total < sel->after_qubit_selection.total)
      sel = &w;
  r.after_qubit_selection = sel->after_qubit_selection;
  r.after_annealing = s.breakdown;

  if (cfg.verify && qubit_count(r.dim) <= kVerifyMaxQubits) {
    const double dev =
        max_abs_diff(evaluate(s.circuit.flatten()), u.matrix());
    r.deviation = dev;
    r.verified = dev <= cfg.verify_tol;
  }
  return {r, std::move(s)};
}

std::string format_summary(const RunConfig& cfg, const PipelineReport& r) {
  std::string s;
  auto line = [&s](const std::string& k, const std::string& v) {
    s += k + ": " + v + "\n";
  };
  line("input", cfg.input.string());
  std::string dim = std::to_string(r.original_dim);
  if (r.dim != r.original_dim)
    dim += " (expanded to " + std::to_string(r.dim) + ")";
  line("dimension", dim);
  line("qubits", std::to_string(qubit_count(r.dim)));
  line("branch", std::string(to_string(r.branch)));
  line("csd", std::string(to_string(r.method)));
  line("workers", std::to_string(cfg.workers));
  line("seed", std::to_string(cfg.seed));
  line("imax", std::to_string(cfg.i_max));
  line("jmax", std::to_string(cfg.j_max));
  line("alpha", fmt("%g", cfg.alpha));
  line("best worker", std::to_string(r.best_worker));
  s += "\n";
  line("No optimisation", five_term(r.no_optimisation));
  line("After selection of an optimised qubit permutation",
       five_term(r.after_qubit_selection));
  line("After simulated annealing", five_term(r.after_annealing));
  s += "\n";
  if (!cfg.verify)
    line("verification", "off");
  else if (!r.deviation)
    line("verification", "skipped (more than " +
                             std::to_string(kVerifyMaxQubits) + " qubits)");
  else
    line("verification", "max deviation " + fmt("%.3e", *r.deviation) +
                             (r.verified ? " (pass)" : " (FAIL)"));
  return s;
}

int run_pipeline(const RunConfig& cfg, std::ostream& log) {
  const UnitaryMatrix u = parse_matrix_file(cfg.input, cfg.tol);
  PipelineOutput out = run_search(u, cfg);
  const auto& r = out.report;

  ArtifactSet files;
  const std::string p = cfg.prefix;
  files.write(p + ".circuit", export_gatelist(out.search.circuit));
  files.write(p + ".history.csv", history_csv(out.search.best().history));
  for (const auto& w : out.search.workers)
    files.write(p + ".history.w" + std::to_string(w.worker) + ".csv",
                history_csv(w.history));
  const std::string summary = format_summary(cfg, r);
  files.write(p + ".summary.txt", summary);
  files.commit();

  log << summary;
  return r.verified ? 0 : 2;
}

}  // namespace csdopt
