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

#include "csdopt/circuit.hpp"

#include <cmath>
#include <utility>

#include "csdopt/errors.hpp"

namespace csdopt {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RY:
      return "RY";
    case GateKind::RZ:
      return "RZ";
    case GateKind::PHASE:
      return "PHASE";
    case GateKind::Z:
      return "Z";
    case GateKind::SWAP:
      return "SWAP";
  }
  return "?";
}

std::string Gate::pattern(int n_qubits) const {
  std::string s(static_cast<std::size_t>(n_qubits), '.');
  for (int k = 1; k <= n_qubits; ++k) {
    const std::uint32_t bit = 1U << (k - 1);
    if (ctrl_mask & bit) s[static_cast<std::size_t>(k - 1)] =
        (ctrl_value & bit) ? '1' : '0';
  }
  return s;
}

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_ < 1 || n_ > kMaxQubits) {
    throw ShapeError("qubit count " + std::to_string(n_) +
                     " outside 1.." + std::to_string(kMaxQubits));
  }
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
  gates_.reserve(gates.size());
  for (const auto& g : gates) append(g);
}

std::size_t Circuit::gate_count() const {
  std::size_t count = 0;
  for (const auto& g : gates_)
    if (!g.is_global_phase()) ++count;
  return count;
}

void Circuit::append(const Gate& g) {
  auto in_range = [this](int q) { return q >= 1 && q <= n_; };
  if (!in_range(g.target)) {
    throw ShapeError("gate target " + std::to_string(g.target) +
                     " outside 1.." + std::to_string(n_));
  }
  if (g.kind == GateKind::SWAP) {
    if (!in_range(g.target2) || g.target2 == g.target) {
      throw ShapeError("invalid SWAP partner " + std::to_string(g.target2));
    }
    if (g.ctrl_mask != 0) throw ShapeError("SWAP gates take no controls");
  }
  const std::uint32_t all = (n_ == 32) ? ~0U : ((1U << n_) - 1U);
  if ((g.ctrl_mask & ~all) != 0 || (g.ctrl_value & ~g.ctrl_mask) != 0) {
    throw ShapeError("control pattern outside the register");
  }
  if (g.ctrl_mask & (1U << (g.target - 1))) {
    throw ShapeError("target qubit " + std::to_string(g.target) +
                     " is also a control");
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw ShapeError("cannot join circuits of different width");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::reversed() const {
  Circuit out(n_);
  out.gates_.assign(gates_.rbegin(), gates_.rend());
  return out;
}

namespace {

bool mergeable(const Gate& a, const Gate& b) {
  if (a.ctrl_mask != b.ctrl_mask) return false;
  const std::uint32_t diff = a.ctrl_value ^ b.ctrl_value;
  if (diff == 0 || (diff & (diff - 1)) != 0) return false;
  return std::abs(a.angle - b.angle) <= kMergeAngleTol;
}

void reduce_run(std::vector<Gate>& run) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < run.size(); ++i) {
      for (std::size_t j = i + 1; j < run.size();) {
        if (mergeable(run[i], run[j])) {
          const std::uint32_t diff = run[i].ctrl_value ^ run[j].ctrl_value;
          run[i].ctrl_mask &= ~diff;
          run[i].ctrl_value &= ~diff;
          run.erase(run.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          j = i + 1;
        } else {
          ++j;
        }
      }
    }
  }
}

}  // namespace

Circuit reduce(const Circuit& c) {
  const auto& in = c.gates();
  std::vector<Gate> out;
  out.reserve(in.size());
  std::vector<Gate> run;
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i].kind == GateKind::SWAP) {
      out.push_back(in[i++]);
      continue;
    }
    std::size_t j = i + 1;
    while (j < in.size() && in[j].kind == in[i].kind &&
           in[j].target == in[i].target)
      ++j;
    if (j - i == 1) {
      out.push_back(in[i]);
    } else {
      run.assign(in.begin() + static_cast<std::ptrdiff_t>(i),
                 in.begin() + static_cast<std::ptrdiff_t>(j));
      reduce_run(run);
      out.insert(out.end(), run.begin(), run.end());
    }
    i = j;
  }
  Circuit result(c.n_qubits());
  for (const auto& g : out) result.append(g);
  return result;
}

Circuit qubit_perm_to_swap_circuit(const QubitPermutation& q) {
  const std::size_t n = q.size();
  if (n == 0) throw InvalidPermutation("empty qubit permutation");
  // After the circuit, wire j must carry what wire q^{-1}[j] held before.
  const QubitPermutation src = q.inverse();
  std::vector<std::size_t> cur(n);
  for (std::size_t j = 0; j < n; ++j) cur[j] = j;
  Circuit c(static_cast<int>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (cur[j] == src[j]) continue;
    std::size_t l = j + 1;
    while (cur[l] != src[j]) ++l;
    std::swap(cur[j], cur[l]);
    c.append(Gate::swap(static_cast<int>(j + 1), static_cast<int>(l + 1)));
  }
  return c;
}

SegmentedCircuit::SegmentedCircuit(int n_qubits,
                                   std::vector<std::string> names,
                                   std::vector<Circuit> segments)
    : n_(n_qubits), names_(std::move(names)), segments_(std::move(segments)) {
  if (names_.size() != segments_.size()) {
    throw ShapeError("segment names and circuits differ in number");
  }
  for (const auto& s : segments_) {
    if (s.n_qubits() != n_) throw ShapeError("segment width mismatch");
  }
}

SegmentedCircuit SegmentedCircuit::five(Circuit q, Circuit p, Circuit u_prime,
                                        Circuit p_t, Circuit q_t) {
  const int n = u_prime.n_qubits();
  std::vector<std::string> names(kNames.begin(), kNames.end());
  std::vector<Circuit> segs{std::move(q), std::move(p), std::move(u_prime),
                            std::move(p_t), std::move(q_t)};
  return SegmentedCircuit(n, std::move(names), std::move(segs));
}

std::size_t SegmentedCircuit::gate_count() const {
  std::size_t total = 0;
  for (const auto& s : segments_) total += s.gate_count();
  return total;
}

Circuit SegmentedCircuit::flatten() const {
  Circuit out(n_);
  for (const auto& s : segments_) out.append(s);
  return out;
}

}  // namespace csdopt
