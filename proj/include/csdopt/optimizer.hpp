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
#include <optional>
#include <string>
#include <vector>

#include "csdopt/circuit.hpp"
#include "csdopt/csd.hpp"
#include "csdopt/linalg.hpp"
#include "csdopt/permutation.hpp"
#include "csdopt/rng.hpp"

namespace csdopt {

/// c_num(U, P, Q) = CSD(U') + CSD(P) + CSD(P^T) + 2 s_num(Q),
/// with U' = P Q U Q^T P^T.
struct CostBreakdown {
  std::size_t csd_u_prime = 0;
  std::size_t csd_p = 0;
  std::size_t csd_p_t = 0;
  std::size_t swap_cost = 0;
  std::size_t total = 0;

  static CostBreakdown of(std::size_t u_prime, std::size_t p, std::size_t p_t,
                          std::size_t swaps) {
    return {u_prime, p, p_t, swaps, u_prime + p + p_t + swaps};
  }
  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

/// "s/2 + p + u' + pt + s/2 = total", the five terms in circuit order.
std::string five_term(const CostBreakdown& c);

struct AnnealConfig {
  std::size_t i_max = 40000;
  std::size_t j_max = 1000;
  double alpha = 0.01;
  std::uint64_t seed = 1;
  int workers = 1;
  Branch branch = Branch::Complex;
  /// Unset means default_method(branch). Used for U', P and P^T alike.
  std::optional<CsdMethod> method;

  /// Throws std::invalid_argument unless 0 <= alpha < 1 and workers >= 1.
  void validate() const;
  CsdMethod resolved_method() const {
    return method.value_or(default_method(branch));
  }
};

enum class Phase { QubitSelection, Anneal };

std::string_view to_string(Phase p);

struct HistoryEntry {
  std::size_t iteration = 0;
  Phase phase = Phase::Anneal;
  std::size_t cost = 0;
  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

/// Reentrant evaluator of c_num for one fixed U.
class CostFunction {
 public:
  /// U must have power-of-two dimension. Throws RealBranchComplexInput for a
  /// complex U on the real branch.
  CostFunction(const UnitaryMatrix& u, Branch branch, CsdMethod method);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  Branch branch() const { return branch_; }
  CsdMethod method() const { return method_; }

  /// Throws ShapeError unless |p| = dim and |q| = n.
  CostBreakdown operator()(const PermutationList& p,
                           const QubitPermutation& q) const;

  /// Reduced circuits for Q, P, U', P^T, Q^T, in time order.
  SegmentedCircuit circuit(const PermutationList& p,
                           const QubitPermutation& q) const;

  /// P Q U Q^T P^T.
  ComplexMatrix u_prime(const PermutationList& p,
                        const QubitPermutation& q) const;

 private:
  void check(const PermutationList& p, const QubitPermutation& q) const;
  Circuit u_prime_circuit(const PermutationList& p,
                          const QubitPermutation& q) const;
  std::size_t permutation_count(const PermutationList& p) const;

  ComplexMatrix u_;
  RealMatrix u_real_;
  Branch branch_;
  CsdMethod method_;
  int n_;
  std::size_t dim_;
};

/// Random-restart search over qubit permutations starting from identity:
/// j_max uniform draws, each kept only if strictly cheaper than the best so
/// far. history has j_max + 1 rows, row 0 being the identity cost.
struct QubitSelection {
  QubitPermutation q;
  CostBreakdown cost;
  /// Cost of the identity, where the search starts.
  CostBreakdown initial;
  std::vector<HistoryEntry> history;
};

QubitSelection select_qubit_permutation(const CostFunction& cost,
                                        std::size_t j_max, Rng& rng);

struct SearchState {
  PermutationList p_current;
  PermutationList p_min;
  QubitPermutation q;
  CostBreakdown cost_current;
  CostBreakdown cost_min;
  std::vector<HistoryEntry> history;
};

/// Threshold-acceptance annealing over p with q fixed, starting from the
/// identity whose cost is `initial` (c_num(U, I, Q)). Each step swaps two
/// distinct random positions of p; a move with cost change d is accepted iff
/// d <= 0 or d < beta, beta = min(ceil(alpha cost_current),
/// ceil(alpha initial)). history has i_max + 1 rows of the current cost.
SearchState anneal(const CostFunction& cost, const QubitPermutation& q,
                   const CostBreakdown& initial, const AnnealConfig& cfg,
                   Rng& rng);

/// Convenience overload computing `initial` itself.
SearchState anneal(const CostFunction& cost, const QubitPermutation& q,
                   const AnnealConfig& cfg, Rng& rng);

/// beta for the given current and initial totals.
std::size_t acceptance_threshold(double alpha, std::size_t current,
                                 std::size_t initial);

struct WorkerResult {
  int worker = 0;
  /// c_num(U, I, I), c_num(U, I, Q) after qubit selection, and the best
  /// c_num(U, P, Q) found.
  CostBreakdown unoptimised;
  CostBreakdown after_qubit_selection;
  SearchState state;
  /// Qubit-selection rows followed by annealing rows.
  std::vector<HistoryEntry> history;
};

struct SearchResult {
  int best_worker = 0;
  PermutationList p;
  QubitPermutation q;
  SegmentedCircuit circuit;
  CostBreakdown breakdown;
  std::vector<WorkerResult> workers;

  const WorkerResult& best() const {
    return workers[static_cast<std::size_t>(best_worker)];
  }
};

/// Runs one worker: rng stream (cfg.seed, worker); worker 0 keeps the
/// identity qubit permutation, the others run qubit selection first.
WorkerResult run_worker(const CostFunction& cost, const AnnealConfig& cfg,
                        int worker);

/// Workers run concurrently with OpenMP; the winner has the lowest
/// cost_min.total, ties going to the lowest worker id. Worker failures are
/// rethrown as WorkerError. Results do not depend on the thread count.
SearchResult parallel_search(const UnitaryMatrix& u, const AnnealConfig& cfg);

/// Same result, one worker after another on the calling thread.
SearchResult parallel_search_serial(const UnitaryMatrix& u,
                                    const AnnealConfig& cfg);

/// `iteration,phase,cost` with a header row.
std::string history_csv(const std::vector<HistoryEntry>& history);

}  // namespace csdopt
