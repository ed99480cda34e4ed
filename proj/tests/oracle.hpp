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

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "csdopt/circuit.hpp"
#include "csdopt/rng.hpp"

namespace oracle {

using csdopt::Complex;
using csdopt::ComplexMatrix;
using csdopt::Gate;
using csdopt::GateKind;

inline ComplexMatrix single(GateKind kind, double a) {
  ComplexMatrix g(2, 2);
  const Complex i(0.0, 1.0);
  switch (kind) {
    case GateKind::RY:
      g << std::cos(a / 2), -std::sin(a / 2), std::sin(a / 2), std::cos(a / 2);
      break;
    case GateKind::RZ:
      g << std::exp(-i * (a / 2)), 0.0, 0.0, std::exp(i * (a / 2));
      break;
    case GateKind::PHASE:
      g << std::exp(i * a), 0.0, 0.0, std::exp(i * a);
      break;
    case GateKind::Z:
      g << 1.0, 0.0, 0.0, -1.0;
      break;
    case GateKind::SWAP:
      g << 0.0, 1.0, 1.0, 0.0;  // X, used to build SWAP from CNOTs
      break;
  }
  return g;
}

/// I + (x)_k F_k with F = G - I on the target, |v><v| on a control and I
/// elsewhere; qubit 1 is the leftmost Kronecker factor.
inline ComplexMatrix controlled(int n, int target, const ComplexMatrix& g,
                                std::uint32_t mask, std::uint32_t value) {
  ComplexMatrix acc = ComplexMatrix::Identity(1, 1);
  for (int k = 1; k <= n; ++k) {
    ComplexMatrix f = ComplexMatrix::Identity(2, 2);
    const std::uint32_t bit = 1u << (k - 1);
    if (k == target) {
      f = g - ComplexMatrix::Identity(2, 2);
    } else if (mask & bit) {
      f.setZero();
      const int v = (value & bit) ? 1 : 0;
      f(v, v) = 1.0;
    }
    acc = Eigen::kroneckerProduct(acc, f).eval();
  }
  const auto dim = acc.rows();
  return ComplexMatrix::Identity(dim, dim) + acc;
}

inline ComplexMatrix gate_matrix(int n, const Gate& g) {
  if (g.kind == GateKind::SWAP) {
    const ComplexMatrix x = single(GateKind::SWAP, 0.0);
    const std::uint32_t a = 1u << (g.target - 1), b = 1u << (g.target2 - 1);
    ComplexMatrix c1 = controlled(n, g.target2, x, a, a);
    ComplexMatrix c2 = controlled(n, g.target, x, b, b);
    return c1 * c2 * c1;
  }
  return controlled(n, g.target, single(g.kind, g.angle), g.ctrl_mask,
                    g.ctrl_value);
}

/// Product of dense gate matrices; later gates multiply on the left.
inline ComplexMatrix dense_evaluate(const csdopt::Circuit& c) {
  const auto dim = Eigen::Index{1} << c.n_qubits();
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : c.gates()) u = gate_matrix(c.n_qubits(), g) * u;
  return u;
}

/// Random rotation and Z gates with random control patterns. Angles are drawn
/// from a small set so that reduce() finds merges.
inline csdopt::Circuit random_circuit(int n, std::size_t len,
                                      csdopt::Rng& rng, bool with_swaps) {
  static constexpr double kAngles[] = {0.3, -1.1, 2.5};
  csdopt::Circuit c(n);
  for (std::size_t i = 0; i < len; ++i) {
    const int t = 1 + static_cast<int>(rng.below(n));
    std::uint32_t mask = 0, value = 0;
    for (int k = 1; k <= n; ++k) {
      if (k == t) continue;
      const auto r = rng.below(3);
      if (r < 2) {
        mask |= 1u << (k - 1);
        if (r == 1) value |= 1u << (k - 1);
      }
    }
    const auto kind = rng.below(with_swaps ? 5 : 4);
    const double a = kAngles[rng.below(3)];
    if (kind == 0) c.append(Gate::rotation(GateKind::RY, t, a, mask, value));
    if (kind == 1) c.append(Gate::rotation(GateKind::RZ, t, a, mask, value));
    if (kind == 2) c.append(Gate::rotation(GateKind::PHASE, t, a, mask, value));
    if (kind == 3) c.append(Gate::z(t, mask, value));
    if (kind == 4 && n > 1) {
      const int u = 1 + static_cast<int>((t + rng.below(n - 1)) % n);
      c.append(Gate::swap(t, u));
    }
  }
  return c;
}

}  // namespace oracle
