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
#include <utility>
#include <vector>

#include "csdopt/linalg.hpp"

namespace csdopt {

/// (1/sqrt(n)) w^{jk} with w = exp(2 pi i / n).
UnitaryMatrix qft_matrix(std::size_t n_dims);

/// Undirected simple graph on vertices 1..vertex_count.
struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Centre vertex 1 joined to leaves 2..k+1.
Graph star_graph(std::size_t k);

/// Root 1 with `degree` children; every later interior vertex has
/// degree - 1 children, down to `generations` levels below the root.
/// Vertices are numbered breadth first.
Graph cayley_tree(std::size_t degree, std::size_t generations);

/// Throws InvalidGraph on self-loops, duplicate edges, out-of-range vertices
/// or an empty edge set, and DisconnectedGraph when some vertex is
/// unreachable from vertex 1.
void validate_graph(const Graph& g);

/// Directed arcs (u, v) of g in basis order: grouped by source vertex, with
/// sources in breadth-first order from vertex 1 (neighbours visited by
/// increasing id) and arcs of one source ordered by target id.
std::vector<std::pair<std::size_t, std::size_t>> arc_order(const Graph& g);

/// Discrete-time quantum walk step U = S C on the arc space.
///
/// C applies the Grover diffusion 2/d J - I to the d arcs entering each
/// vertex; S exchanges arc (u, v) with (v, u). Real, of dimension 2|E|.
UnitaryMatrix dtqw_step(const Graph& g);

/// Haar-random unitary / orthogonal matrices (QR of a Gaussian matrix with
/// the phases of R's diagonal divided out).
UnitaryMatrix random_unitary(std::size_t n_dims, std::uint64_t seed);
UnitaryMatrix random_orthogonal(std::size_t n_dims, std::uint64_t seed);

/// Random real orthogonal matrix supported on `pattern` (true = entry may be
/// nonzero). Starts from a random permutation matrix inside the pattern and
/// applies random Givens rotations on row or column pairs whose combined
/// support stays inside it. Throws InfeasiblePattern when the pattern holds
/// no permutation matrix, ShapeError when it is not n_dims x n_dims.
UnitaryMatrix random_orthogonal_sparse(
    std::size_t n_dims, const std::vector<std::vector<bool>>& pattern,
    std::uint64_t seed);

/// The 8x8 orthogonal matrix printed with four decimals in the benchmark
/// table, as printed.
RealMatrix printed_real_benchmark();

/// printed_real_benchmark() made exactly orthogonal while keeping its zero
/// pattern: alternate the nearest orthogonal matrix with re-imposing the
/// zeros until both hold to 1e-14.
UnitaryMatrix real_benchmark();

}  // namespace csdopt
