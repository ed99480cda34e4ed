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

#include <cmath>
#include <vector>

#include "csdopt/circuit.hpp"
#include "csdopt/errors.hpp"

namespace csdopt {

namespace {

/// A gate lowered to state-index bit masks and a 2x2 matrix.
struct LoweredGate {
  GateKind kind;
  std::size_t target_bit;
  std::size_t target2_bit;
  std::size_t ctrl_mask;
  std::size_t ctrl_value;
  Complex m00, m01, m10, m11;
};

std::vector<LoweredGate> lower(const Circuit& c) {
  const int n = c.n_qubits();
  auto bit_of = [n](int qubit) {
    return std::size_t{1} << static_cast<std::size_t>(n - qubit);
  };
  std::vector<LoweredGate> out;
  out.reserve(c.size());
  for (const auto& g : c.gates()) {
    LoweredGate l{g.kind, bit_of(g.target), 0, 0, 0, 1.0, 0.0, 0.0, 1.0};
    if (g.kind == GateKind::SWAP) l.target2_bit = bit_of(g.target2);
    for (int k = 1; k <= n; ++k) {
      const std::uint32_t qb = 1U << (k - 1);
      if (g.ctrl_mask & qb) {
        l.ctrl_mask |= bit_of(k);
        if (g.ctrl_value & qb) l.ctrl_value |= bit_of(k);
      }
    }
    const double half = g.angle / 2.0;
    switch (g.kind) {
      case GateKind::RY:
        l.m00 = std::cos(half);
        l.m01 = -std::sin(half);
        l.m10 = std::sin(half);
        l.m11 = std::cos(half);
        break;
      case GateKind::RZ:
        l.m00 = std::polar(1.0, -half);
        l.m11 = std::polar(1.0, half);
        break;
      case GateKind::PHASE:
        l.m00 = l.m11 = std::polar(1.0, g.angle);
        break;
      case GateKind::Z:
        l.m11 = -1.0;
        break;
      case GateKind::SWAP:
        break;
    }
    out.push_back(l);
  }
  return out;
}

void apply_lowered(const std::vector<LoweredGate>& gates,
                   std::span<Complex> state) {
  const std::size_t dim = state.size();
  for (const auto& g : gates) {
    if (g.kind == GateKind::SWAP) {
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & g.target_bit) && !(i & g.target2_bit)) {
          const std::size_t j = (i & ~g.target_bit) | g.target2_bit;
          std::swap(state[i], state[j]);
        }
      }
      continue;
    }
    for (std::size_t i0 = 0; i0 < dim; ++i0) {
      if ((i0 & g.target_bit) || (i0 & g.ctrl_mask) != g.ctrl_value) continue;
      const std::size_t i1 = i0 | g.target_bit;
      const Complex a = state[i0];
      const Complex b = state[i1];
      state[i0] = g.m00 * a + g.m01 * b;
      state[i1] = g.m10 * a + g.m11 * b;
    }
  }
}

void check_cap(const Circuit& c, int cap) {
  if (c.n_qubits() > cap) {
    throw TooLarge("cannot simulate " + std::to_string(c.n_qubits()) +
                   " qubits; cap is " + std::to_string(cap));
  }
}

}  // namespace

void apply_circuit(const Circuit& c, std::span<Complex> state) {
  if (state.size() != (std::size_t{1} << c.n_qubits())) {
    throw ShapeError("state length does not match circuit width");
  }
  apply_lowered(lower(c), state);
}

ComplexMatrix evaluate(const Circuit& c, int cap) {
  check_cap(c, cap);
  const auto lowered = lower(c);
  const auto dim = Eigen::Index{1} << c.n_qubits();
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  // Column j is the image of basis state j; columns are independent.
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < dim; ++j) {
    apply_lowered(lowered,
                  std::span<Complex>(out.col(j).data(),
                                     static_cast<std::size_t>(dim)));
  }
  return out;
}

ComplexMatrix evaluate_serial(const Circuit& c, int cap) {
  check_cap(c, cap);
  const auto lowered = lower(c);
  const auto dim = Eigen::Index{1} << c.n_qubits();
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    apply_lowered(lowered,
                  std::span<Complex>(out.col(j).data(),
                                     static_cast<std::size_t>(dim)));
  }
  return out;
}

}  // namespace csdopt
