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

#include "csdopt/optimizer.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "csdopt/errors.hpp"

namespace csdopt {

std::string five_term(const CostBreakdown& c) {
  const std::size_t s = c.swap_cost / 2;
  return std::to_string(s) + " + " + std::to_string(c.csd_p) + " + " +
         std::to_string(c.csd_u_prime) + " + " + std::to_string(c.csd_p_t) +
         " + " + std::to_string(c.swap_cost - s) + " = " +
         std::to_string(c.total);
}

void AnnealConfig::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1), got " +
                                std::to_string(alpha));
  }
  if (workers < 1) {
    throw std::invalid_argument("workers must be at least 1, got " +
                                std::to_string(workers));
  }
}

std::string_view to_string(Phase p) {
  return p == Phase::QubitSelection ? "qubitsel" : "anneal";
}

namespace {

template <class M>
M permuted(const M& u, const PermutationList& r) {
  const auto m = static_cast<Eigen::Index>(r.size());
  M out(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto rj = static_cast<Eigen::Index>(r[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < m; ++i)
      out(i, j) = u(static_cast<Eigen::Index>(r[static_cast<std::size_t>(i)]), rj);
  }
  return out;
}

PermutationList combined(const PermutationList& p, const QubitPermutation& q) {
  return compose(p, qubit_perm_to_full_perm(q));
}

}  // namespace

CostFunction::CostFunction(const UnitaryMatrix& u, Branch branch,
                           CsdMethod method)
    : u_(u.matrix()),
      branch_(branch),
      method_(method),
      n_(qubit_count(u.dim())),
      dim_(u.dim()) {
  if (branch == Branch::Real) {
    if (!u.is_real()) {
      throw RealBranchComplexInput(
          "real branch requested but the matrix has nonzero imaginary parts");
    }
    u_real_ = u.real_part();
  }
}

void CostFunction::check(const PermutationList& p,
                         const QubitPermutation& q) const {
  if (p.size() != dim_ || q.size() != static_cast<std::size_t>(n_)) {
    throw ShapeError("permutation sizes (" + std::to_string(p.size()) + ", " +
                     std::to_string(q.size()) + ") do not fit a " +
                     std::to_string(dim_) + "-dimensional unitary");
  }
}

ComplexMatrix CostFunction::u_prime(const PermutationList& p,
                                    const QubitPermutation& q) const {
  check(p, q);
  return permuted(u_, combined(p, q));
}

Circuit CostFunction::u_prime_circuit(const PermutationList& p,
                                      const QubitPermutation& q) const {
  const PermutationList r = combined(p, q);
  if (branch_ == Branch::Real) {
    return reduce(decompose_real(
        r.is_identity() ? u_real_ : permuted(u_real_, r), method_));
  }
  return reduce(
      decompose_complex(r.is_identity() ? u_ : permuted(u_, r), method_));
}

std::size_t CostFunction::permutation_count(const PermutationList& p) const {
  if (p.is_identity()) return 0;
  return csd_gate_count(PermutationMatrix(p), method_);
}

CostBreakdown CostFunction::operator()(const PermutationList& p,
                                       const QubitPermutation& q) const {
  check(p, q);
  return CostBreakdown::of(u_prime_circuit(p, q).gate_count(),
                           permutation_count(p),
                           permutation_count(p.inverse()),
                           2 * swap_gate_count(q));
}

SegmentedCircuit CostFunction::circuit(const PermutationList& p,
                                       const QubitPermutation& q) const {
  check(p, q);
  Circuit qc = qubit_perm_to_swap_circuit(q);
  Circuit qt = qc.reversed();
  const PermutationMatrix pm(p);
  Circuit pc = p.is_identity() ? Circuit(n_) : reduce(decompose(pm, method_));
  Circuit ptc = p.is_identity() ? Circuit(n_)
                                : reduce(decompose(pm.transpose(), method_));
  return SegmentedCircuit::five(std::move(qc), std::move(pc),
                                u_prime_circuit(p, q), std::move(ptc),
                                std::move(qt));
}

QubitSelection select_qubit_permutation(const CostFunction& cost,
                                        std::size_t j_max, Rng& rng) {
  const auto n = static_cast<std::size_t>(cost.n_qubits());
  const PermutationList p = PermutationList::identity(cost.dim());
  QubitSelection sel{QubitPermutation::identity(n), {}, {}, {}};
  sel.cost = cost(p, sel.q);
  sel.initial = sel.cost;
  sel.history.reserve(j_max + 1);
  sel.history.push_back({0, Phase::QubitSelection, sel.cost.total});
  std::vector<std::size_t> draw(n);
  for (std::size_t j = 1; j <= j_max; ++j) {
    for (std::size_t k = 0; k < n; ++k) draw[k] = k;
    rng.shuffle(draw);
    QubitPermutation candidate(draw);
    const CostBreakdown c = cost(p, candidate);
    if (c.total < sel.cost.total) {
      sel.q = std::move(candidate);
      sel.cost = c;
    }
    sel.history.push_back({j, Phase::QubitSelection, sel.cost.total});
  }
  return sel;
}

std::size_t acceptance_threshold(double alpha, std::size_t current,
                                 std::size_t initial) {
  // The small slack keeps exact products such as 0.01 * 300 from rounding
  // up past the integer.
  auto ceil_of = [alpha](std::size_t c) {
    return static_cast<std::size_t>(
        std::max(0.0, std::ceil(alpha * static_cast<double>(c) - 1e-9)));
  };
  return std::min(ceil_of(current), ceil_of(initial));
}

SearchState anneal(const CostFunction& cost, const QubitPermutation& q,
                   const CostBreakdown& initial, const AnnealConfig& cfg,
                   Rng& rng) {
  const std::size_t m = cost.dim();
  SearchState st{PermutationList::identity(m), PermutationList::identity(m),
                 q, initial, initial, {}};
  st.history.reserve(cfg.i_max + 1);
  st.history.push_back({0, Phase::Anneal, initial.total});
  for (std::size_t i = 1; i <= cfg.i_max; ++i) {
    if (m >= 2) {
      const auto [a, b] = rng.distinct_pair(m);
      PermutationList candidate = st.p_current.with_swapped(a, b);
      const CostBreakdown c = cost(candidate, q);
      const std::size_t beta =
          acceptance_threshold(cfg.alpha, st.cost_current.total, initial.total);
      const bool accept = c.total <= st.cost_current.total ||
                          c.total - st.cost_current.total < beta;
      if (accept) {
        st.p_current = std::move(candidate);
        st.cost_current = c;
        if (c.total < st.cost_min.total) {
          st.p_min = st.p_current;
          st.cost_min = c;
        }
      }
    }
    st.history.push_back({i, Phase::Anneal, st.cost_current.total});
  }
  return st;
}

SearchState anneal(const CostFunction& cost, const QubitPermutation& q,
                   const AnnealConfig& cfg, Rng& rng) {
  return anneal(cost, q, cost(PermutationList::identity(cost.dim()), q), cfg,
                rng);
}

WorkerResult run_worker(const CostFunction& cost, const AnnealConfig& cfg,
                        int worker) {
  Rng rng(cfg.seed, static_cast<std::uint64_t>(worker));
  WorkerResult r;
  r.worker = worker;
  QubitSelection sel =
      select_qubit_permutation(cost, worker == 0 ? 0 : cfg.j_max, rng);
  r.unoptimised = sel.initial;
  r.after_qubit_selection = sel.cost;
  r.state = anneal(cost, sel.q, sel.cost, cfg, rng);
  r.history = std::move(sel.history);
  r.history.insert(r.history.end(), r.state.history.begin(),
                   r.state.history.end());
  return r;
}

namespace {

SearchResult collate(const CostFunction& cost, std::vector<WorkerResult> ws) {
  SearchResult res;
  for (std::size_t w = 1; w < ws.size(); ++w)
    if (ws[w].state.cost_min.total <
        ws[static_cast<std::size_t>(res.best_worker)].state.cost_min.total)
      res.best_worker = static_cast<int>(w);
  const SearchState& best = ws[static_cast<std::size_t>(res.best_worker)].state;
  res.p = best.p_min;
  res.q = best.q;
  res.breakdown = cost(res.p, res.q);
  if (res.breakdown != best.cost_min) {
    throw Error("re-evaluated cost " + std::to_string(res.breakdown.total) +
                " differs from the search's " +
                std::to_string(best.cost_min.total));
  }
  res.circuit = cost.circuit(res.p, res.q);
  res.workers = std::move(ws);
  return res;
}

template <bool Parallel>
SearchResult search(const UnitaryMatrix& u, const AnnealConfig& cfg) {
  cfg.validate();
  const CostFunction cost(u, cfg.branch, cfg.resolved_method());
  const auto n = static_cast<std::size_t>(cfg.workers);
  std::vector<WorkerResult> ws(n);
  std::vector<std::exception_ptr> errors(n);
  const auto body = [&](long w) {
    try {
      ws[static_cast<std::size_t>(w)] = run_worker(cost, cfg, static_cast<int>(w));
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long w = 0; w < static_cast<long>(n); ++w) body(w);
  } else {
    for (long w = 0; w < static_cast<long>(n); ++w) body(w);
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (!errors[w]) continue;
    try {
      std::rethrow_exception(errors[w]);
    } catch (const std::exception& e) {
      throw WorkerError(static_cast<int>(w), e.what());
    }
  }
  return collate(cost, std::move(ws));
}

}  // namespace

SearchResult parallel_search(const UnitaryMatrix& u, const AnnealConfig& cfg) {
  return search<true>(u, cfg);
}

SearchResult parallel_search_serial(const UnitaryMatrix& u,
                                    const AnnealConfig& cfg) {
  return search<false>(u, cfg);
}

std::string history_csv(const std::vector<HistoryEntry>& history) {
  std::string out = "iteration,phase,cost\n";
  for (const auto& h : history) {
    out += std::to_string(h.iteration);
    out += ',';
    out += to_string(h.phase);
    out += ',';
    out += std::to_string(h.cost);
    out += '\n';
  }
  return out;
}

}  // namespace csdopt
