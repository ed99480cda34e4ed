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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "csdopt/csd.hpp"
#include "csdopt/linalg.hpp"
#include "csdopt/optimizer.hpp"

namespace csdopt {

/// Reads the matrix text format:
///
///   dim <m> <real|complex>
///   <m lines of m entries>
///
/// Complex entries are written `re,im`. Throws ParseError on a grammar
/// violation and NotUnitary when the result deviates from unitarity by more
/// than `tol`.
UnitaryMatrix parse_matrix(std::string_view text, double tol = kUnitarityTol);
UnitaryMatrix parse_matrix_file(const std::filesystem::path& path,
                                double tol = kUnitarityTol);

/// Writes with %.17g, as `real` when every imaginary part is exactly zero.
std::string format_matrix(const ComplexMatrix& m);
void write_matrix_file(const std::filesystem::path& path,
                       const ComplexMatrix& m);

enum class BranchChoice { Real, Complex, Auto };

BranchChoice parse_branch_choice(std::string_view s);

struct RunConfig {
  std::filesystem::path input;
  BranchChoice branch = BranchChoice::Auto;
  std::size_t i_max = 40000;
  std::size_t j_max = 1000;
  double alpha = 0.01;
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<CsdMethod> method;
  std::string prefix = "out";
  bool verify = false;
  double tol = kUnitarityTol;
  double verify_tol = 1e-8;
};

/// Largest qubit count for which verification is attempted.
inline constexpr int kVerifyMaxQubits = 12;

struct PipelineReport {
  std::size_t original_dim = 0;
  std::size_t dim = 0;
  Branch branch = Branch::Complex;
  CsdMethod method = CsdMethod::Lapack;
  CostBreakdown no_optimisation;
  CostBreakdown after_qubit_selection;
  CostBreakdown after_annealing;
  int best_worker = 0;
  std::optional<double> deviation;
  bool verified = true;
};

/// Resolves the branch of an already parsed matrix.
Branch resolve_branch(BranchChoice choice, const UnitaryMatrix& u);

/// Expands, searches, and returns everything the summary reports. Writes
/// nothing.
struct PipelineOutput {
  PipelineReport report;
  SearchResult search;
};
PipelineOutput run_search(const UnitaryMatrix& u, const RunConfig& cfg);

std::string format_summary(const RunConfig& cfg, const PipelineReport& r);

/// Parses cfg.input, runs the search and writes `<prefix>.circuit`,
/// `<prefix>.summary.txt`, `<prefix>.history.csv` (best worker) and
/// `<prefix>.history.w<id>.csv` for every worker. Returns 0 on success and 2
/// when verification ran and failed; module errors propagate after any
/// partially written files are removed.
int run_pipeline(const RunConfig& cfg, std::ostream& log);

}  // namespace csdopt
