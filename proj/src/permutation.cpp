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

#include "csdopt/permutation.hpp"

#include "csdopt/errors.hpp"

namespace csdopt {

namespace detail {

void validate_bijection(std::span<const std::size_t> entries,
                        const char* what) {
  std::vector<bool> seen(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::size_t x = entries[i];
    if (x >= entries.size()) {
      throw InvalidPermutation(std::string(what) + ": entry " +
                               std::to_string(i + 1) + " is out of range");
    }
    if (seen[x]) {
      throw InvalidPermutation(std::string(what) + ": index " +
                               std::to_string(x + 1) + " appears twice");
    }
    seen[x] = true;
  }
}

}  // namespace detail

RealMatrix PermutationMatrix::dense() const {
  const auto m = static_cast<Eigen::Index>(list_.size());
  RealMatrix out = RealMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    out(i, static_cast<Eigen::Index>(list_[static_cast<std::size_t>(i)])) =
        1.0;
  return out;
}

PermutationMatrix perm_list_to_matrix(const PermutationList& p) {
  return PermutationMatrix(p);
}

PermutationList matrix_to_perm_list(const RealMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidPermutation("permutation matrix must be square");
  }
  std::vector<std::size_t> list(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Eigen::Index hit = -1;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double v = m(i, j);
      if (v == 1.0) {
        if (hit >= 0) {
          throw InvalidPermutation("row " + std::to_string(i + 1) +
                                   " has more than one 1");
        }
        hit = j;
      } else if (v != 0.0) {
        throw InvalidPermutation("entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") is not 0 or 1");
      }
    }
    if (hit < 0) {
      throw InvalidPermutation("row " + std::to_string(i + 1) + " has no 1");
    }
    list[static_cast<std::size_t>(i)] = static_cast<std::size_t>(hit);
  }
  return PermutationList(std::move(list));
}

PermutationList compose(const PermutationList& a, const PermutationList& b) {
  if (a.size() != b.size()) {
    throw ShapeError("cannot compose permutations of different lengths");
  }
  std::vector<std::size_t> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return PermutationList(std::move(r));
}

PermutationList qubit_perm_to_full_perm(const QubitPermutation& q) {
  const std::size_t n = q.size();
  const std::size_t m = std::size_t{1} << n;
  // Qubit k (0-based) lives at bit n-1-k.
  std::vector<std::size_t> full(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::size_t y = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (x >> (n - 1 - q[k])) & 1U;
      y |= bit << (n - 1 - k);
    }
    full[x] = y;
  }
  return PermutationList(std::move(full));
}

std::size_t swap_gate_count(const QubitPermutation& q) {
  const std::size_t n = q.size();
  std::vector<bool> visited(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t i = start; !visited[i]; i = q[i]) visited[i] = true;
  }
  return n - cycles;
}

ComplexMatrix conjugate_by_permutation(const ComplexMatrix& u,
                                       const PermutationList& r) {
  const auto m = u.rows();
  if (u.cols() != m || static_cast<std::size_t>(m) != r.size()) {
    throw ShapeError("permutation length " + std::to_string(r.size()) +
                     " does not match matrix dimension " +
                     std::to_string(m));
  }
  ComplexMatrix out(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto rj = static_cast<Eigen::Index>(r[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < m; ++i) {
      out(i, j) = u(static_cast<Eigen::Index>(r[static_cast<std::size_t>(i)]),
                    rj);
    }
  }
  return out;
}

}  // namespace csdopt
