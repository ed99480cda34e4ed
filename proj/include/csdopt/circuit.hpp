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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csdopt/linalg.hpp"
#include "csdopt/permutation.hpp"

namespace csdopt {

/// Largest register evaluate() will simulate unless told otherwise.
inline constexpr int kDefaultSimulationCap = 12;
/// Qubit masks are 32-bit.
inline constexpr int kMaxQubits = 30;

enum class GateKind { RY, RZ, PHASE, Z, SWAP };

std::string_view to_string(GateKind kind);

/// A single-qubit operation on `target`, applied only when every control
/// qubit holds its required value.
///
/// Qubits are numbered 1..n. Bit k-1 of `ctrl_mask` marks qubit k as a
/// control and the same bit of `ctrl_value` is the value it must hold.
///
/// Matrices on the target: RY(a) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]],
/// RZ(a) = diag(e^{-ia/2}, e^{ia/2}), PHASE(a) = e^{ia} I, Z = diag(1, -1).
/// An uncontrolled PHASE is a global phase. SWAP exchanges `target` and
/// `target2` and carries neither angle nor controls.
struct Gate {
  GateKind kind = GateKind::RY;
  int target = 1;
  int target2 = 0;
  double angle = 0.0;
  std::uint32_t ctrl_mask = 0;
  std::uint32_t ctrl_value = 0;

  static Gate rotation(GateKind kind, int target, double angle,
                       std::uint32_t mask = 0, std::uint32_t value = 0) {
    return Gate{kind, target, 0, angle, mask, value & mask};
  }
  static Gate z(int target, std::uint32_t mask = 0, std::uint32_t value = 0) {
    return Gate{GateKind::Z, target, 0, 0.0, mask, value & mask};
  }
  static Gate swap(int a, int b) { return Gate{GateKind::SWAP, a, b, 0.0, 0, 0}; }

  bool has_angle() const {
    return kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::PHASE;
  }
  /// An uncontrolled PHASE: physically unobservable, excluded from counts.
  bool is_global_phase() const {
    return kind == GateKind::PHASE && ctrl_mask == 0;
  }

  /// n-character pattern over {0,1,.}; '.' at the target and at
  /// uncontrolled qubits.
  std::string pattern(int n_qubits) const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates in time order: gates()[0] acts first.
class Circuit {
 public:
  explicit Circuit(int n_qubits = 1);
  Circuit(int n_qubits, std::vector<Gate> gates);

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Number of gates excluding global-phase gates; this is the quantity the
  /// optimiser minimises.
  std::size_t gate_count() const;

  /// Throws ShapeError if the gate's qubits fall outside 1..n or the target
  /// is also a control.
  void append(const Gate& g);
  void append(const Circuit& other);

  /// The same gates in reverse order. For circuits of self-inverse gates
  /// (SWAP, Z) this is the inverse circuit.
  Circuit reversed() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<Gate> gates_;
};

/// Merges pairs of same-kind, same-target gates with equal angles whose
/// control patterns differ at exactly one qubit (0 on one, 1 on the other);
/// the merged gate drops that control. Merges happen only inside maximal
/// runs of consecutive gates sharing kind and target, and repeat to a
/// fixpoint.
Circuit reduce(const Circuit& c);

/// Angle tolerance used by reduce() to decide two gates are equal.
inline constexpr double kMergeAngleTol = 1e-12;

/// Unitary implemented by the circuit (later gates multiply on the left).
/// Columns are simulated in parallel with OpenMP. Throws TooLarge when
/// n_qubits exceeds `cap`.
ComplexMatrix evaluate(const Circuit& c, int cap = kDefaultSimulationCap);

/// Single-threaded reference for evaluate(); identical results.
ComplexMatrix evaluate_serial(const Circuit& c,
                              int cap = kDefaultSimulationCap);

/// Applies every gate of `c` in order to a state vector of length 2^n.
void apply_circuit(const Circuit& c, std::span<Complex> state);

/// swap_gate_count(q) SWAP gates whose evaluation is the permutation matrix
/// of qubit_perm_to_full_perm(q).
Circuit qubit_perm_to_swap_circuit(const QubitPermutation& q);

/// The five pieces Q, P, U', P^T, Q^T of U = Q^T P^T U' P Q, in time order.
class SegmentedCircuit {
 public:
  static constexpr std::array<std::string_view, 5> kNames = {
      "Q", "P", "Uprime", "PT", "QT"};

  SegmentedCircuit() = default;
  SegmentedCircuit(int n_qubits, std::vector<std::string> names,
                   std::vector<Circuit> segments);
  /// Standard five-segment layout.
  static SegmentedCircuit five(Circuit q, Circuit p, Circuit u_prime,
                               Circuit p_t, Circuit q_t);

  int n_qubits() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Circuit>& segments() const { return segments_; }

  std::size_t gate_count() const;
  /// All segments concatenated in time order.
  Circuit flatten() const;

  friend bool operator==(const SegmentedCircuit&,
                         const SegmentedCircuit&) = default;

 private:
  int n_ = 1;
  std::vector<std::string> names_;
  std::vector<Circuit> segments_;
};

/// Gate-list text form, one gate per line:
///
///   qubits <n>
///   segments <k>
///   segment <name> <gatecount>
///   RY t=<target> a=<angle %.17g> c=<pattern>
///   Z t=<target> c=<pattern>
///   SWAP t=<i>,<j>
std::string export_gatelist(const SegmentedCircuit& c);
SegmentedCircuit parse_gatelist(std::string_view text);

/// OpenQASM-flavoured listing, one instruction per line. Write-only.
std::string export_qasm(const SegmentedCircuit& c);

}  // namespace csdopt
