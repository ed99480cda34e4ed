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


#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "csdopt/benchgen.hpp"
#include "csdopt/cli.hpp"
#include "csdopt/errors.hpp"

using namespace csdopt;

namespace {

UnitaryMatrix generate(const std::string& kind,
                       const std::vector<std::size_t>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument("gen " + kind + " takes " +
                                  std::to_string(k) + " argument(s)");
  };
  if (kind == "qft") {
    need(1);
    return qft_matrix(args[0]);
  }
  if (kind == "star") {
    need(1);
    return dtqw_step(star_graph(args[0]));
  }
  if (kind == "cayley") {
    need(2);
    return dtqw_step(cayley_tree(args[0], args[1]));
  }
  if (kind == "unitary") {
    need(2);
    return random_unitary(args[0], args[1]);
  }
  if (kind == "orthogonal") {
    need(2);
    return random_orthogonal(args[0], args[1]);
  }
  if (kind == "fixture") {
    need(0);
    return real_benchmark();
  }
  throw std::invalid_argument("unknown generator '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-count optimisation of cosine-sine decomposed circuits"};
  app.require_subcommand(0, 1);

  RunConfig cfg;
  cfg.workers = static_cast<int>(
      std::max(1u, std::thread::hardware_concurrency()));
  std::string branch = "auto";
  std::string csd;
  app.add_option("--input", cfg.input, "Matrix file");
  app.add_option("--branch", branch, "real, complex or auto")
      ->check(CLI::IsMember({"real", "complex", "auto"}));
  app.add_option("--imax", cfg.i_max, "Annealing iterations per worker");
  app.add_option("--jmax", cfg.j_max, "Qubit-permutation draws per worker");
  app.add_option("--alpha", cfg.alpha, "Acceptance threshold factor");
  app.add_option("--seed", cfg.seed, "Base seed");
  app.add_option("--workers", cfg.workers, "Independent search workers")
      ->check(CLI::PositiveNumber);
  app.add_option("--prefix", cfg.prefix, "Output path prefix");
  app.add_flag("--verify", cfg.verify,
               "Simulate the exported circuit against the input");
  app.add_option("--tol", cfg.tol, "Unitarity tolerance for the input");
  app.add_option("--csd", csd, "CSD kernel: lapack or jacobi")
      ->check(CLI::IsMember({"lapack", "jacobi"}));

  auto* gen = app.add_subcommand("gen", "Write a benchmark matrix");
  std::string kind;
  std::vector<std::size_t> gen_args;
  std::string gen_out;
  gen->add_option("kind", kind,
                  "qft <m> | star <k> | cayley <d> <g> | unitary <m> <seed> "
                  "| orthogonal <m> <seed> | fixture")
      ->required();
  gen->add_option("args", gen_args);
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const UnitaryMatrix u = generate(kind, gen_args);
      if (gen_out.empty())
        std::cout << format_matrix(u.matrix());
      else
        write_matrix_file(gen_out, u.matrix());
      return 0;
    }
    if (cfg.input.empty()) {
      std::cerr << "--input is required\n";
      return 1;
    }
    cfg.branch = parse_branch_choice(branch);
    if (csd == "lapack") cfg.method = CsdMethod::Lapack;
    if (csd == "jacobi") cfg.method = CsdMethod::Jacobi;
    const int rc = run_pipeline(cfg, std::cout);
    if (rc != 0) std::cerr << "verification failed\n";
    return rc;
  } catch (const NotUnitary& e) {
    std::cerr << "error: " << e.what() << " (max deviation " << e.deviation()
              << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
