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
#include <vector>

#include "csdopt/circuit.hpp"
#include "csdopt/linalg.hpp"
#include "csdopt/permutation.hpp"

namespace csdopt {

/// Which decomposition to run. The real branch works over orthogonal
/// matrices and emits only RY and Z gates.
enum class Branch { Real, Complex };

std::string_view to_string(Branch b);

/// How each cosine-sine step is computed.
///
/// Lapack calls dorcsd / zuncsd, falling back to Jacobi for any step LAPACK
/// fails to converge on. Jacobi runs one-sided Jacobi SVDs on the
/// quarter blocks without reordering columns; it leaves already orthogonal
/// columns alone, so sparse inputs keep their sparsity through the
/// recursion and usually yield far fewer gates.
enum class CsdMethod { Lapack, Jacobi };

std::string_view to_string(CsdMethod m);

/// Lapack for the real branch, Jacobi for the complex one.
CsdMethod default_method(Branch b);

/// Rotation angles below this magnitude are treated as zero and their gates
/// are not emitted.
inline constexpr double kZeroAngleTol = 1e-12;

/// One cosine-sine step on a 2k x 2k unitary:
///
///   U = [L0 0; 0 L1] [C -S; S C] [R0 0; 0 R1],
///
/// C = diag(cos angles[j]), S = diag(sin angles[j]), every angle in
/// [0, pi/2]. The Jacobi method keeps the angles in column order; Lapack
/// returns them in its own order.
struct CsdBlocks {
  ComplexMatrix left_top;
  ComplexMatrix left_bottom;
  std::vector<double> angles;
  ComplexMatrix right_top;
  ComplexMatrix right_bottom;

  /// The product above.
  ComplexMatrix reassemble() const;
};

/// Throws ShapeError when the dimension is odd or below 4 and
/// NumericalBreakdown when the underlying SVD does not converge.
CsdBlocks csd_step(const UnitaryMatrix& u,
                   CsdMethod method = CsdMethod::Lapack);

/// e^{i phase} Rz(alpha) Ry(theta) Rz(beta) for a complex 2x2 unitary, or
/// Ry(theta) (times Z on the right when `reflect`) for a real orthogonal one;
/// alpha, beta and phase are then zero.
struct LeafDecomposition {
  double alpha = 0.0;
  double theta = 0.0;
  double beta = 0.0;
  double phase = 0.0;
  bool reflect = false;

  ComplexMatrix matrix() const;
};

LeafDecomposition decompose_leaf_complex(const ComplexMatrix& u2);
LeafDecomposition decompose_leaf_real(const RealMatrix& o2);

/// Recursive CSD of a 2^n x 2^n unitary into controlled single-qubit gates.
///
/// The first cut is on qubit 1 (the most significant bit), the next on
/// qubit 2, and so on; the leaves are uniformly controlled operations on
/// qubit n. Each middle factor becomes 2^{n-1} fully controlled RY gates.
/// Diagonal factors left over by each leaf are split into a part that
/// commutes with the next middle factor (absorbed by the following leaf) and
/// RZ (complex) or Z (real) gates on the next cut qubit; the last leaf's
/// diagonal is emitted as a chain of controlled RZ/Z gates, plus one global
/// PHASE in the complex branch. Real leaves keep their first sign at +1, so
/// no global sign is left over.
///
/// The evaluation of the result equals `u` exactly (up to rounding), with no
/// global-phase slack. The result is not reduced. Throws ShapeError for
/// non-power-of-two input and RealBranchComplexInput when the real branch is
/// asked to handle nonzero imaginary parts.
Circuit decompose(const UnitaryMatrix& u, Branch branch, CsdMethod method);
/// Uses default_method(branch).
Circuit decompose(const UnitaryMatrix& u, Branch branch);

/// Real-branch decomposition of a permutation matrix.
Circuit decompose(const PermutationMatrix& p,
                  CsdMethod method = CsdMethod::Lapack);

/// gate_count() of reduce(decompose(...)).
std::size_t csd_gate_count(const UnitaryMatrix& u, Branch branch,
                           CsdMethod method);
std::size_t csd_gate_count(const UnitaryMatrix& u, Branch branch);
std::size_t csd_gate_count(const PermutationMatrix& p,
                           CsdMethod method = CsdMethod::Lapack);

/// Unchecked entry points for callers that already hold a validated
/// power-of-two unitary (the optimiser's inner loop).
Circuit decompose_real(const RealMatrix& u, CsdMethod method);
Circuit decompose_complex(const ComplexMatrix& u, CsdMethod method);

}  // namespace csdopt
