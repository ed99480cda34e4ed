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

#include "csdopt/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <type_traits>

#include "csdopt/errors.hpp"
#include "csdopt/rng.hpp"

namespace csdopt {

using Eigen::Index;

UnitaryMatrix qft_matrix(std::size_t n_dims) {
  if (n_dims == 0) throw ShapeError("QFT dimension must be positive");
  const auto n = static_cast<Index>(n_dims);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_dims));
  ComplexMatrix m(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      // Reduce jk mod n first so the angle stays accurate for large n.
      const auto e = static_cast<double>((j * k) % n);
      m(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e /
                                      static_cast<double>(n));
    }
  return UnitaryMatrix::trusted(std::move(m));
}

Graph star_graph(std::size_t k) {
  if (k == 0) throw InvalidGraph("star graph needs at least one leaf");
  Graph g{k + 1, {}};
  for (std::size_t v = 2; v <= k + 1; ++v) g.edges.emplace_back(1, v);
  return g;
}

Graph cayley_tree(std::size_t degree, std::size_t generations) {
  if (degree < 2 || generations < 1) {
    throw InvalidGraph("Cayley tree needs degree >= 2 and generations >= 1");
  }
  Graph g{1, {}};
  std::vector<std::size_t> level{1};
  for (std::size_t gen = 0; gen < generations; ++gen) {
    const std::size_t children = gen == 0 ? degree : degree - 1;
    std::vector<std::size_t> next;
    for (std::size_t parent : level)
      for (std::size_t c = 0; c < children; ++c) {
        const std::size_t v = ++g.vertex_count;
        g.edges.emplace_back(parent, v);
        next.push_back(v);
      }
    level = std::move(next);
  }
  return g;
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count + 1);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::size_t> bfs_order(
    const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{1};
  seen[1] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
  }
  return order;
}

}  // namespace

void validate_graph(const Graph& g) {
  if (g.vertex_count == 0 || g.edges.empty()) {
    throw InvalidGraph("graph has no edges");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 1 || v < 1 || u > g.vertex_count || v > g.vertex_count) {
      throw InvalidGraph("edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") has a vertex out of range");
    }
    if (u == v) {
      throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    }
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InvalidGraph("duplicate edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ")");
    }
  }
  const auto order = bfs_order(adjacency(g));
  if (order.size() != g.vertex_count) {
    throw DisconnectedGraph("only " + std::to_string(order.size()) + " of " +
                            std::to_string(g.vertex_count) +
                            " vertices are reachable from vertex 1");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> arc_order(const Graph& g) {
  validate_graph(g);
  const auto adj = adjacency(g);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t u : bfs_order(adj))
    for (std::size_t v : adj[u]) arcs.emplace_back(u, v);
  return arcs;
}

UnitaryMatrix dtqw_step(const Graph& g) {
  const auto arcs = arc_order(g);
  const auto dim = static_cast<Index>(arcs.size());
  std::map<std::pair<std::size_t, std::size_t>, Index> index;
  std::vector<std::vector<Index>> entering(g.vertex_count + 1);
  for (Index i = 0; i < dim; ++i) {
    index[arcs[static_cast<std::size_t>(i)]] = i;
    entering[arcs[static_cast<std::size_t>(i)].second].push_back(i);
  }
  RealMatrix coin = RealMatrix::Zero(dim, dim);
  for (const auto& group : entering) {
    const double d = static_cast<double>(group.size());
    for (Index a : group)
      for (Index b : group) coin(a, b) = 2.0 / d - (a == b ? 1.0 : 0.0);
  }
  RealMatrix shift = RealMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const auto [u, v] = arcs[static_cast<std::size_t>(i)];
    shift(index.at({v, u}), i) = 1.0;
  }
  return UnitaryMatrix(RealMatrix(shift * coin));
}

namespace {

template <class M>
M haar(std::size_t n_dims, std::uint64_t seed, bool complex_entries) {
  if (n_dims == 0) throw ShapeError("dimension must be positive");
  Rng rng(seed);
  const auto n = static_cast<Index>(n_dims);
  M a(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      if constexpr (std::is_same_v<M, ComplexMatrix>) {
        const double re = rng.normal();
        const double im = complex_entries ? rng.normal() : 0.0;
        a(i, j) = Complex(re, im);
      } else {
        a(i, j) = rng.normal();
      }
    }
  Eigen::HouseholderQR<M> qr(a);
  M q = qr.householderQ();
  const M r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const auto d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

}  // namespace

UnitaryMatrix random_unitary(std::size_t n_dims, std::uint64_t seed) {
  return UnitaryMatrix(haar<ComplexMatrix>(n_dims, seed, true), 1e-12);
}

UnitaryMatrix random_orthogonal(std::size_t n_dims, std::uint64_t seed) {
  return UnitaryMatrix(haar<RealMatrix>(n_dims, seed, false), 1e-12);
}

namespace {

/// Kuhn's augmenting paths with rows tried in random order.
std::vector<Index> random_matching(
    const std::vector<std::vector<bool>>& pattern, Rng& rng) {
  const auto n = pattern.size();
  std::vector<std::vector<std::size_t>> cols(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      if (pattern[r][c]) cols[r].push_back(c);
    rng.shuffle(cols[r]);
  }
  std::vector<std::size_t> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = r;
  rng.shuffle(rows);
  constexpr auto kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kFree);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, std::size_t r) -> bool {
    for (std::size_t c : cols[r]) {
      if (visited[c]) continue;
      visited[c] = true;
      if (owner[c] == kFree || self(self, owner[c])) {
        owner[c] = r;
        return true;
      }
    }
    return false;
  };
  for (std::size_t r : rows) {
    visited.assign(n, false);
    if (!augment(augment, r)) {
      throw InfeasiblePattern("pattern admits no orthogonal matrix: row " +
                              std::to_string(r + 1) +
                              " cannot be matched to a column");
    }
  }
  std::vector<Index> row_to_col(n);
  for (std::size_t c = 0; c < n; ++c) row_to_col[owner[c]] = static_cast<Index>(c);
  return row_to_col;
}

}  // namespace

UnitaryMatrix random_orthogonal_sparse(
    std::size_t n_dims, const std::vector<std::vector<bool>>& pattern,
    std::uint64_t seed) {
  if (n_dims < 2) throw ShapeError("dimension must be at least 2");
  if (pattern.size() != n_dims) throw ShapeError("pattern has wrong height");
  for (const auto& row : pattern)
    if (row.size() != n_dims) throw ShapeError("pattern has wrong width");
  Rng rng(seed);
  const auto n = static_cast<Index>(n_dims);
  const auto match = random_matching(pattern, rng);
  RealMatrix m = RealMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) m(r, match[static_cast<std::size_t>(r)]) = 1.0;

  auto allowed = [&](Index r, Index c) {
    return pattern[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };
  const std::size_t attempts = 8 * n_dims * n_dims;
  for (std::size_t t = 0; t < attempts; ++t) {
    const bool rows = rng.below(2) == 0;
    const auto [ia, ib] = rng.distinct_pair(n_dims);
    const auto a = static_cast<Index>(ia);
    const auto b = static_cast<Index>(ib);
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    bool ok = true;
    for (Index k = 0; k < n && ok; ++k) {
      const double x = rows ? m(a, k) : m(k, a);
      const double y = rows ? m(b, k) : m(k, b);
      if (x == 0.0 && y == 0.0) continue;
      ok = rows ? allowed(a, k) && allowed(b, k) : allowed(k, a) && allowed(k, b);
    }
    if (!ok) continue;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    for (Index k = 0; k < n; ++k) {
      double& x = rows ? m(a, k) : m(k, a);
      double& y = rows ? m(b, k) : m(k, b);
      const double nx = c * x - s * y;
      const double ny = s * x + c * y;
      x = nx;
      y = ny;
    }
  }
  return UnitaryMatrix(m, 1e-12);
}

RealMatrix printed_real_benchmark() {
  RealMatrix u(8, 8);
  u << 0.0438, 0, 0, 0, 0.9990, 0, 0, 0,  //
      0.1297, 0.8689, -0.2956, 0, -0.0057, 0.1538, -0.3423, 0,  //
      -0.2923, 0, 0.6661, 0, 0.0128, 0, -0.6861, 0,  //
      -0.0061, -0.0412, 0.0140, 0.7058, 0.0003, 0.3008, 0.0162, -0.6397,  //
      0.9147, 0, 0.4021, 0, -0.0401, 0, 0, 0,  //
      0.0185, 0.1242, -0.0422, 0.3961, -0.0008, -0.9073, -0.0489, 0,  //
      0.2424, -0.4762, -0.5524, 0, -0.0106, 0, -0.6397, 0,  //
      0.0051, 0.0343, -0.0117, -0.5874, -0.0002, -0.2503, -0.0135, -0.7686;
  return u;
}

UnitaryMatrix real_benchmark() {
  const RealMatrix printed = printed_real_benchmark();
  const RealMatrix mask = printed.unaryExpr(
      [](double x) { return x == 0.0 ? 0.0 : 1.0; });
  RealMatrix x = printed;
  for (int it = 0; it < 1000; ++it) {
    Eigen::JacobiSVD<RealMatrix> svd(x, Eigen::ComputeFullU |
                                            Eigen::ComputeFullV);
    x = (svd.matrixU() * svd.matrixV().transpose()).cwiseProduct(mask);
    const double dev =
        (x * x.transpose() - RealMatrix::Identity(8, 8)).cwiseAbs().maxCoeff();
    if (dev < 1e-14) return UnitaryMatrix(x, 1e-12);
  }
  throw NumericalBreakdown("benchmark fixture projection did not converge");
}

}  // namespace csdopt
