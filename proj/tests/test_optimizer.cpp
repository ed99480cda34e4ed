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


#include <doctest.h>

#include <algorithm>

#include "csdopt/benchgen.hpp"
#include "csdopt/errors.hpp"
#include "csdopt/optimizer.hpp"

using namespace csdopt;

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

/// c_num computed from its definition with dense matrices.
std::size_t direct_cost(const UnitaryMatrix& u, Branch b, CsdMethod m,
                        const PermutationList& p, const QubitPermutation& q) {
  const ComplexMatrix pd = perm_list_to_matrix(p).dense().cast<Complex>();
  const ComplexMatrix qd =
      perm_list_to_matrix(qubit_perm_to_full_perm(q)).dense().cast<Complex>();
  const ComplexMatrix up = pd * qd * u.matrix() * qd.adjoint() * pd.adjoint();
  const std::size_t cp =
      p.is_identity() ? 0 : csd_gate_count(PermutationMatrix(p), m);
  const std::size_t cpt =
      p.is_identity() ? 0
                      : csd_gate_count(PermutationMatrix(p).transpose(), m);
  return csd_gate_count(UnitaryMatrix::trusted(up), b, m) + cp + cpt +
         2 * swap_gate_count(q);
}

struct Optimum {
  std::size_t over_p_identity_q;
  std::size_t over_all;
};

Optimum brute_force(const CostFunction& f) {
  const std::size_t dim = f.dim();
  Optimum best{SIZE_MAX, SIZE_MAX};
  auto qv = iota(static_cast<std::size_t>(f.n_qubits()));
  do {
    const QubitPermutation q(qv);
    auto pv = iota(dim);
    do {
      const std::size_t c = f(PermutationList(pv), q).total;
      best.over_all = std::min(best.over_all, c);
      if (q.is_identity())
        best.over_p_identity_q = std::min(best.over_p_identity_q, c);
    } while (std::next_permutation(pv.begin(), pv.end()));
  } while (std::next_permutation(qv.begin(), qv.end()));
  return best;
}

}  // namespace

TEST_CASE("five-term formatting") {
  CHECK(five_term(CostBreakdown::of(19, 2, 2, 0)) ==
        "0 + 2 + 19 + 2 + 0 = 23");
  CHECK(five_term(CostBreakdown::of(16, 2, 2, 2)) ==
        "1 + 2 + 16 + 2 + 1 = 22");
}

TEST_CASE("acceptance threshold") {
  CHECK(acceptance_threshold(0.0, 500, 900) == 0);
  CHECK(acceptance_threshold(0.01, 500, 900) == 5);
  CHECK(acceptance_threshold(0.01, 950, 900) == 9);
  CHECK(acceptance_threshold(0.01, 100, 100) == 1);
  CHECK(acceptance_threshold(0.01, 101, 900) == 2);
}

TEST_CASE("config validation") {
  AnnealConfig c;
  CHECK_NOTHROW(c.validate());
  c.alpha = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.alpha = -0.1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.alpha = 0.5;
  c.workers = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("cost function agrees with its definition") {
  Rng rng(4);
  const UnitaryMatrix us[] = {random_orthogonal(8, 1), random_unitary(8, 2)};
  for (const auto& u : us) {
    const Branch b = u.is_real() ? Branch::Real : Branch::Complex;
    for (auto m : {CsdMethod::Lapack, CsdMethod::Jacobi}) {
      const CostFunction f(u, b, m);
      for (int t = 0; t < 5; ++t) {
        auto pv = iota(8), qv = iota(3);
        rng.shuffle(pv);
        rng.shuffle(qv);
        const PermutationList p(pv);
        const QubitPermutation q(qv);
        const CostBreakdown c = f(p, q);
        CHECK(c.total == direct_cost(u, b, m, p, q));
        CHECK(c.total ==
              c.csd_u_prime + c.csd_p + c.csd_p_t + c.swap_cost);
        CHECK(c.swap_cost == 2 * swap_gate_count(q));
        const SegmentedCircuit circ = f.circuit(p, q);
        CHECK(circ.gate_count() == c.total);
        CHECK(max_abs_diff(evaluate(circ.flatten()), u.matrix()) < 1e-8);
      }
    }
  }
}

TEST_CASE("identity permutations cost the plain decomposition") {
  const auto u = real_benchmark();
  const CostFunction f(u, Branch::Real, CsdMethod::Lapack);
  const CostBreakdown c =
      f(PermutationList::identity(8), QubitPermutation::identity(3));
  CHECK(c.csd_p == 0);
  CHECK(c.csd_p_t == 0);
  CHECK(c.swap_cost == 0);
  CHECK(c.total == csd_gate_count(u, Branch::Real, CsdMethod::Lapack));
}

TEST_CASE("cost function checks its inputs") {
  const auto u = random_unitary(4, 1);
  CHECK_THROWS_AS(CostFunction(u, Branch::Real, CsdMethod::Lapack),
                  RealBranchComplexInput);
  const CostFunction f(u, Branch::Complex, CsdMethod::Jacobi);
  CHECK_THROWS_AS(f(PermutationList::identity(8), QubitPermutation::identity(2)),
                  ShapeError);
  CHECK_THROWS_AS(f(PermutationList::identity(4), QubitPermutation::identity(3)),
                  ShapeError);
}

TEST_CASE("brute force on the {2,1,4,3} permutation matrix") {
  const PermutationList pl =
      PermutationList::from_one_based(std::vector<std::size_t>{2, 1, 4, 3});
  const UnitaryMatrix u(perm_list_to_matrix(pl).dense());
  const CostFunction f(u, Branch::Real, CsdMethod::Lapack);
  const Optimum o = brute_force(f);
  const std::size_t plain =
      f(PermutationList::identity(4), QubitPermutation::identity(2)).total;
  CHECK(o.over_all <= plain);
  CHECK(o.over_p_identity_q <= plain);
}

TEST_CASE("qubit selection") {
  const auto u = random_orthogonal(8, 5);
  const CostFunction f(u, Branch::Real, CsdMethod::Lapack);
  Rng rng(1);
  const QubitSelection none = select_qubit_permutation(f, 0, rng);
  CHECK(none.q.is_identity());
  CHECK(none.history.size() == 1);
  CHECK(none.cost == none.initial);

  const UnitaryMatrix id(RealMatrix(RealMatrix::Identity(8, 8)));
  const CostFunction fi(id, Branch::Real, CsdMethod::Lapack);
  const QubitSelection s = select_qubit_permutation(fi, 50, rng);
  CHECK(s.q.is_identity());
  CHECK(s.history.size() == 51);
  for (const auto& h : s.history) CHECK(h.cost == 0);

  const QubitSelection t = select_qubit_permutation(f, 40, rng);
  std::size_t best = SIZE_MAX;
  auto qv = iota(3);
  do {
    best = std::min(best,
                    f(PermutationList::identity(8), QubitPermutation(qv)).total);
  } while (std::next_permutation(qv.begin(), qv.end()));
  CHECK(t.cost.total == best);
  for (std::size_t i = 1; i < t.history.size(); ++i)
    CHECK(t.history[i].cost <= t.history[i - 1].cost);
}

TEST_CASE("qubit selection on two qubits finds the better ordering") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto u = random_orthogonal_sparse(
        4, {{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}}, seed);
    const CostFunction f(u, Branch::Real, CsdMethod::Lapack);
    Rng rng(seed);
    const QubitSelection s = select_qubit_permutation(f, 20, rng);
    const std::size_t id =
        f(PermutationList::identity(4), QubitPermutation::identity(2)).total;
    const std::size_t sw =
        f(PermutationList::identity(4), QubitPermutation({1, 0})).total;
    CHECK(s.cost.total == std::min(id, sw));
  }
}

TEST_CASE("annealing") {
  const auto u = real_benchmark();
  const CostFunction f(u, Branch::Real, CsdMethod::Lapack);
  const auto q = QubitPermutation::identity(3);
  AnnealConfig cfg;
  cfg.branch = Branch::Real;

  Rng r0(1);
  cfg.i_max = 0;
  const SearchState zero = anneal(f, q, cfg, r0);
  CHECK(zero.p_min.is_identity());
  CHECK(zero.cost_min == f(PermutationList::identity(8), q));
  CHECK(zero.history.size() == 1);

  Rng r1(2);
  cfg.i_max = 300;
  cfg.alpha = 0.0;
  const SearchState greedy = anneal(f, q, cfg, r1);
  REQUIRE(greedy.history.size() == 301);
  for (std::size_t i = 1; i < greedy.history.size(); ++i)
    CHECK(greedy.history[i].cost <= greedy.history[i - 1].cost);
  CHECK(greedy.cost_min == f(greedy.p_min, q));
  CHECK(greedy.cost_current == f(greedy.p_current, q));

  Rng r2(3);
  cfg.alpha = 0.2;
  const SearchState loose = anneal(f, q, cfg, r2);
  std::size_t lowest = SIZE_MAX;
  for (const auto& h : loose.history) lowest = std::min(lowest, h.cost);
  CHECK(loose.cost_min.total == lowest);
}

TEST_CASE("annealing reaches the exhaustive optimum on 4x4") {
  const auto u = random_orthogonal(4, 8);
  const CostFunction f(u, Branch::Real, CsdMethod::Lapack);
  const Optimum o = brute_force(f);
  AnnealConfig cfg;
  cfg.i_max = 5000;
  cfg.branch = Branch::Real;
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    hits += anneal(f, QubitPermutation::identity(2), cfg, rng).cost_min.total ==
            o.over_p_identity_q;
  }
  CHECK(hits >= 19);
}

TEST_CASE("worker pool") {
  const auto u = dtqw_step(star_graph(4));
  AnnealConfig cfg;
  cfg.i_max = 200;
  cfg.j_max = 30;
  cfg.branch = Branch::Real;

  cfg.workers = 1;
  const SearchResult one = parallel_search(u, cfg);
  const CostFunction f(u, Branch::Real, cfg.resolved_method());
  const WorkerResult root = run_worker(f, cfg, 0);
  CHECK(one.q.is_identity());
  CHECK(one.breakdown == root.state.cost_min);
  CHECK(one.p == root.state.p_min);

  cfg.workers = 5;
  const SearchResult a = parallel_search(u, cfg);
  const SearchResult b = parallel_search(u, cfg);
  const SearchResult c = parallel_search_serial(u, cfg);
  CHECK(a.circuit == b.circuit);
  CHECK(a.circuit == c.circuit);
  CHECK(history_csv(a.best().history) == history_csv(c.best().history));
  CHECK(a.breakdown.total <= one.breakdown.total);
  for (const auto& w : a.workers) CHECK(a.breakdown.total <= w.state.cost_min.total);
  CHECK(a.breakdown == f(a.p, a.q));
  CHECK(max_abs_diff(evaluate(a.circuit.flatten()), u.matrix()) < 1e-8);
  for (const auto& w : a.workers)
    CHECK(w.history.size() ==
          (w.worker == 0 ? 1 : cfg.j_max + 1) + cfg.i_max + 1);
}

TEST_CASE("history csv") {
  const std::vector<HistoryEntry> h{{0, Phase::QubitSelection, 12},
                                    {0, Phase::Anneal, 10}};
  CHECK(history_csv(h) == "iteration,phase,cost\n0,qubitsel,12\n0,anneal,10\n");
}
