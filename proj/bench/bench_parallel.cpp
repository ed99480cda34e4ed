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


// Serial against OpenMP timings for circuit evaluation and the worker pool.
// Usage: csdopt_bench [qubits=8] [workers=4] [imax=2000]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "csdopt/benchgen.hpp"
#include "csdopt/circuit.hpp"
#include "csdopt/csd.hpp"
#include "csdopt/optimizer.hpp"

using namespace csdopt;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int qubits = argc > 1 ? std::atoi(argv[1]) : 8;
  const int workers = argc > 2 ? std::atoi(argv[2]) : 4;
  const std::size_t imax = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 2000;
  std::printf("threads %d\n", omp_get_max_threads());

  const Circuit c =
      reduce(decompose(random_unitary(std::size_t{1} << qubits, 7),
                       Branch::Complex));
  ComplexMatrix a, b;
  const double ts = seconds([&] { b = evaluate_serial(c); });
  const double tp = seconds([&] { a = evaluate(c); });
  std::printf("evaluate  n=%d gates=%zu  serial %.3fs  omp %.3fs  x%.2f  "
              "diff %.1e\n",
              qubits, c.gate_count(), ts, tp, ts / tp, max_abs_diff(a, b));

  AnnealConfig cfg;
  cfg.i_max = imax;
  cfg.j_max = 200;
  cfg.workers = workers;
  cfg.branch = Branch::Real;
  const UnitaryMatrix u = dtqw_step(star_graph(8));
  SearchResult rs, rp;
  const double ss = seconds([&] { rs = parallel_search_serial(u, cfg); });
  const double sp = seconds([&] { rp = parallel_search(u, cfg); });
  std::printf("search    workers=%d imax=%zu  serial %.3fs  omp %.3fs  x%.2f  "
              "best %zu/%zu %s\n",
              workers, imax, ss, sp, ss / sp, rs.breakdown.total,
              rp.breakdown.total,
              rs.circuit == rp.circuit ? "identical" : "MISMATCH");
  return rs.circuit == rp.circuit && a == b ? 0 : 1;
}
