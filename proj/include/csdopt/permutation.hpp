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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "csdopt/linalg.hpp"

namespace csdopt {

namespace detail {
void validate_bijection(std::span<const std::size_t> entries,
                        const char* what);
}

/// A bijection on {0..size-1}, stored as the image list.
///
/// The external (file / report) form is 1-based, matching the usual list
/// notation {2,1,4,3}; internally everything is 0-based. The tag keeps
/// general index permutations and qubit relabellings from being mixed up.
template <class Tag>
class BasicPermutation {
 public:
  BasicPermutation() = default;

  /// Throws InvalidPermutation unless `zero_based` is a bijection.
  explicit BasicPermutation(std::vector<std::size_t> zero_based)
      : map_(std::move(zero_based)) {
    detail::validate_bijection(map_, Tag::name);
  }

  static BasicPermutation identity(std::size_t size) {
    std::vector<std::size_t> v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = i;
    return BasicPermutation(std::move(v), Unchecked{});
  }

  static BasicPermutation from_one_based(std::span<const std::size_t> one) {
    std::vector<std::size_t> v;
    v.reserve(one.size());
    // 0 wraps to SIZE_MAX and is rejected as out of range.
    for (std::size_t x : one) v.push_back(x - 1);
    return BasicPermutation(std::move(v));
  }

  std::size_t size() const { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& zero_based() const { return map_; }

  std::vector<std::size_t> one_based() const {
    std::vector<std::size_t> v(map_);
    for (auto& x : v) ++x;
    return v;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < map_.size(); ++i)
      if (map_[i] != i) return false;
    return true;
  }

  BasicPermutation inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return BasicPermutation(std::move(inv), Unchecked{});
  }

  /// Copy with positions i and j exchanged.
  BasicPermutation with_swapped(std::size_t i, std::size_t j) const {
    BasicPermutation out(*this);
    std::swap(out.map_[i], out.map_[j]);
    return out;
  }

  /// {a,b,c} in 1-based form.
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < map_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(map_[i] + 1);
    }
    return s + "}";
  }

  friend bool operator==(const BasicPermutation&,
                         const BasicPermutation&) = default;

 private:
  struct Unchecked {};
  BasicPermutation(std::vector<std::size_t> v, Unchecked)
      : map_(std::move(v)) {}

  std::vector<std::size_t> map_;
};

struct IndexPermutationTag {
  static constexpr const char* name = "permutation list";
};
struct QubitPermutationTag {
  static constexpr const char* name = "qubit permutation";
};

/// General permutation p over the 2^n basis indices.
using PermutationList = BasicPermutation<IndexPermutationTag>;
/// Qubit relabelling q over the n wires.
using QubitPermutation = BasicPermutation<QubitPermutationTag>;

/// Permutation matrix with (P)_{i,j} = 1 iff p[i] = j. Kept in list form;
/// the dense matrix is built only on request.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(PermutationList list) : list_(std::move(list)) {}

  std::size_t dim() const { return list_.size(); }
  const PermutationList& list() const { return list_; }
  /// P^T = P^{-1}.
  PermutationMatrix transpose() const {
    return PermutationMatrix(list_.inverse());
  }
  RealMatrix dense() const;

 private:
  PermutationList list_;
};

PermutationMatrix perm_list_to_matrix(const PermutationList& p);

/// Inverse of perm_list_to_matrix; throws InvalidPermutation unless `m` is a
/// 0/1 matrix with exactly one 1 per row and column.
PermutationList matrix_to_perm_list(const RealMatrix& m);

/// List of the matrix product A*B: r[i] = b[a[i]].
PermutationList compose(const PermutationList& a, const PermutationList& b);

/// Full basis-state permutation induced by relabelling qubits.
///
/// Bit convention: qubit 1 is the most significant bit of a basis index.
/// The returned list maps basis index x to y where qubit k of y carries the
/// value of qubit q[k] of x.
PermutationList qubit_perm_to_full_perm(const QubitPermutation& q);

/// Minimal number of SWAP gates realising q: n minus its cycle count.
std::size_t swap_gate_count(const QubitPermutation& q);

/// R U R^T for the permutation matrix R of list r, i.e. entry (i,j) of the
/// result is U(r[i], r[j]).
ComplexMatrix conjugate_by_permutation(const ComplexMatrix& u,
                                       const PermutationList& r);

}  // namespace csdopt
