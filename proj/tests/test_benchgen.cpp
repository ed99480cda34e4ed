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

#include <cmath>
#include <set>

#include "csdopt/benchgen.hpp"
#include "csdopt/errors.hpp"

using namespace csdopt;

namespace {

std::vector<std::vector<bool>> full_pattern(std::size_t n, bool v) {
  return std::vector<std::vector<bool>>(n, std::vector<bool>(n, v));
}

}  // namespace

TEST_CASE("qft matrices") {
  CHECK(qft_matrix(1).matrix() == ComplexMatrix::Ones(1, 1));
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix two(2, 2);
  two << h, h, h, -h;
  CHECK(max_abs_diff(qft_matrix(2).matrix(), two) < 1e-16);
  const auto f = qft_matrix(64);
  CHECK(f.dim() == 64);
  CHECK(unitarity_deviation(f.matrix()) < 1e-12);
  const Complex w = std::polar(1.0, 2.0 * std::acos(-1.0) / 64.0);
  CHECK(std::abs(f(3, 5) - std::pow(w, 15) / 8.0) < 1e-15);
}

TEST_CASE("star and cayley graphs") {
  const Graph s = star_graph(8);
  CHECK(s.vertex_count == 9);
  CHECK(s.edges.size() == 8);
  const Graph one = star_graph(1);
  CHECK(one.vertex_count == 2);
  CHECK(one.edges.size() == 1);
  const Graph t = cayley_tree(3, 3);
  CHECK(t.vertex_count == 22);
  CHECK(arc_order(t).size() == 42);
  CHECK_THROWS_AS(star_graph(0), InvalidGraph);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(validate_graph(Graph{3, {}}), InvalidGraph);
  CHECK_THROWS_AS(validate_graph(Graph{2, {{1, 3}}}), InvalidGraph);
  CHECK_THROWS_AS(validate_graph(Graph{2, {{1, 1}}}), InvalidGraph);
  CHECK_THROWS_AS(validate_graph(Graph{2, {{1, 2}, {2, 1}}}), InvalidGraph);
  CHECK_THROWS_AS(validate_graph(Graph{4, {{1, 2}, {3, 4}}}),
                  DisconnectedGraph);
  CHECK_NOTHROW(validate_graph(star_graph(3)));
}

TEST_CASE("single edge walk is a swap") {
  const auto u = dtqw_step(star_graph(1));
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(u.matrix() == x);
}

TEST_CASE("8-star walk operator matches the printed matrix") {
  RealMatrix printed = RealMatrix::Zero(16, 16);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) printed(i, 8 + j) = i == j ? -0.75 : 0.25;
  for (int i = 0; i < 8; ++i) printed(8 + i, i) = 1.0;
  const auto u = dtqw_step(star_graph(8));
  CHECK(u.is_real());
  CHECK(max_abs_diff(u.matrix(), printed.cast<Complex>()) <= 1e-12);
}

TEST_CASE("3-Cayley tree walk operator entries") {
  const auto u = dtqw_step(cayley_tree(3, 3));
  REQUIRE(u.dim() == 42);
  CHECK(u.is_real());
  const std::set<double> allowed{-1.0 / 3.0, 2.0 / 3.0, 1.0, 0.0};
  std::set<double> seen;
  for (std::size_t i = 0; i < 42; ++i)
    for (std::size_t j = 0; j < 42; ++j) {
      const double v = u(i, j).real();
      bool ok = false;
      for (double a : allowed)
        if (std::abs(v - a) < 1e-15) {
          ok = true;
          seen.insert(a);
        }
      CHECK(ok);
    }
  CHECK(seen.size() == 4);
}

TEST_CASE("random generators are seeded and unitary") {
  CHECK(random_unitary(8, 3).matrix() == random_unitary(8, 3).matrix());
  CHECK(random_unitary(8, 3).matrix() != random_unitary(8, 4).matrix());
  const auto o = random_orthogonal(16, 2);
  CHECK(o.is_real());
  CHECK(unitarity_deviation(o.matrix()) < 1e-12);
  CHECK_FALSE(random_unitary(4, 1).is_real());
}

TEST_CASE("sparse orthogonal generator") {
  const auto dense = random_orthogonal_sparse(4, full_pattern(4, true), 1);
  CHECK(dense.is_real());
  int nonzero = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) nonzero += dense(i, j) != 0.0;
  CHECK(nonzero == 16);

  auto diag = full_pattern(4, false);
  for (std::size_t i = 0; i < 4; ++i) diag[i][i] = true;
  const auto id = random_orthogonal_sparse(4, diag, 2);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(id(i, i)) == 1.0);

  auto block = full_pattern(4, false);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) block[i][j] = (i < 2) == (j < 2);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto b = random_orthogonal_sparse(4, block, seed);
    CHECK(unitarity_deviation(b.matrix()) < 1e-12);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!block[i][j]) CHECK(b(i, j) == 0.0);
  }

  auto empty_row = full_pattern(4, true);
  empty_row[2] = std::vector<bool>(4, false);
  CHECK_THROWS_AS(random_orthogonal_sparse(4, empty_row, 1),
                  InfeasiblePattern);
  CHECK_THROWS_AS(random_orthogonal_sparse(4, full_pattern(3, true), 1),
                  ShapeError);
}

TEST_CASE("8x8 orthogonal fixture") {
  const RealMatrix printed = printed_real_benchmark();
  const auto u = real_benchmark();
  CHECK(u.is_real());
  CHECK(unitarity_deviation(u.matrix()) < 1e-13);
  // Printed to four decimals.
  CHECK(max_abs_diff(u.matrix(), printed.cast<Complex>()) < 1e-4);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (printed(i, j) == 0.0) CHECK(u(i, j) == 0.0);
}
