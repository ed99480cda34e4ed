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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "csdopt/benchgen.hpp"
#include "csdopt/circuit.hpp"
#include "csdopt/cli.hpp"
#include "csdopt/errors.hpp"

using namespace csdopt;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "csdopt_cli_test";
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse a 2x2 identity") {
  const auto u = parse_matrix("dim 2 real\n1 0\n0 1\n");
  CHECK(u.matrix() == ComplexMatrix::Identity(2, 2));
  CHECK(u.is_real());
}

TEST_CASE("complex entries and number forms") {
  const auto u = parse_matrix(
      "dim 2 complex\n"
      "0.70710678118654757,0 0,7.0710678118654757e-1\n"
      "+0,0.70710678118654757 7.0710678118654757E-1,-0\n");
  CHECK(u(0, 1) == Complex(0.0, 0.70710678118654757));
  CHECK_FALSE(u.is_real());
}

TEST_CASE("missing row reports the line after the last one") {
  try {
    parse_matrix("dim 3 real\n1 0 0\n0 1 0\n");
    FAIL("accepted a short file");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("grammar violations") {
  auto where = [](const std::string& text) {
    try {
      parse_matrix(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  CHECK(where("") == std::make_pair(std::size_t{1}, std::size_t{1}));
  CHECK(where("dim 2 quaternion\n1 0\n0 1\n").first == 1);
  CHECK(where("dim 2 real\n1 0\n0 x\n") ==
        std::make_pair(std::size_t{3}, std::size_t{3}));
  CHECK(where("dim 2 real\n1 0 0\n0 1\n") ==
        std::make_pair(std::size_t{2}, std::size_t{5}));
  CHECK(where("dim 2 complex\n1,0 0\n0,0 1,0\n") ==
        std::make_pair(std::size_t{2}, std::size_t{5}));
  CHECK(where("dim 2 complex\n1, 0 0,0\n0,0 1,0\n").first == 2);
  CHECK(where("dim 2 real\n1 0\n0 1\n1\n").first == 4);
  CHECK(where("dim 2 real\n1 0\n0 1\n\n\n").first == 0);
}

TEST_CASE("non-unitary input reports its deviation") {
  try {
    parse_matrix("dim 2 real\n1 0\n0 2\n");
    FAIL("accepted a non-unitary matrix");
  } catch (const NotUnitary& e) {
    CHECK(e.deviation() == doctest::Approx(3.0));
  }
  CHECK_NOTHROW(parse_matrix("dim 1 real\n1.000001\n", 1e-5));
}

TEST_CASE("qft-8 file round trip") {
  const fs::path p = scratch_dir() / "qft8.txt";
  const auto q = qft_matrix(8);
  write_matrix_file(p, q.matrix());
  const auto back = parse_matrix_file(p);
  CHECK(max_abs_diff(back.matrix(), q.matrix()) <= 1e-15);
  CHECK(slurp(p).rfind("dim 8 complex\n", 0) == 0);
  CHECK_THROWS_AS(parse_matrix_file(scratch_dir() / "absent.txt"), IoError);
}

TEST_CASE("branch resolution") {
  const auto real = parse_matrix("dim 2 complex\n0,0 1,0\n1,0 0,0\n");
  CHECK(resolve_branch(BranchChoice::Auto, real) == Branch::Real);
  CHECK(resolve_branch(BranchChoice::Complex, real) == Branch::Complex);
  CHECK(resolve_branch(BranchChoice::Auto, qft_matrix(4)) == Branch::Complex);
  CHECK(parse_branch_choice("real") == BranchChoice::Real);
  CHECK_THROWS_AS(parse_branch_choice("other"), std::invalid_argument);
}

TEST_CASE("pipeline on the 4x4 identity") {
  const fs::path dir = scratch_dir();
  write_matrix_file(dir / "id4.txt", ComplexMatrix::Identity(4, 4));
  RunConfig cfg;
  cfg.input = dir / "id4.txt";
  cfg.prefix = (dir / "id4").string();
  cfg.i_max = 50;
  cfg.j_max = 10;
  cfg.workers = 2;
  cfg.verify = true;
  std::ostringstream log;
  CHECK(run_pipeline(cfg, log) == 0);
  const std::string s = slurp(dir / "id4.summary.txt");
  CHECK(s.find("No optimisation: 0 + 0 + 0 + 0 + 0 = 0\n") !=
        std::string::npos);
  CHECK(s.find("After selection of an optimised qubit permutation: 0 + 0 + "
               "0 + 0 + 0 = 0\n") != std::string::npos);
  CHECK(s.find("After simulated annealing: 0 + 0 + 0 + 0 + 0 = 0\n") !=
        std::string::npos);
  CHECK(fs::exists(dir / "id4.circuit"));
  CHECK(fs::exists(dir / "id4.history.csv"));
  CHECK(fs::exists(dir / "id4.history.w0.csv"));
  CHECK(fs::exists(dir / "id4.history.w1.csv"));
  CHECK(log.str() == s);
}

TEST_CASE("pipeline on the 8-star verifies and is reproducible") {
  const fs::path dir = scratch_dir();
  write_matrix_file(dir / "star.txt", dtqw_step(star_graph(8)).matrix());
  RunConfig cfg;
  cfg.input = dir / "star.txt";
  cfg.i_max = 150;
  cfg.j_max = 20;
  cfg.workers = 3;
  cfg.verify = true;
  std::ostringstream log;
  cfg.prefix = (dir / "a").string();
  REQUIRE(run_pipeline(cfg, log) == 0);
  cfg.prefix = (dir / "b").string();
  REQUIRE(run_pipeline(cfg, log) == 0);
  for (const char* ext : {".circuit", ".history.csv", ".summary.txt"})
    CHECK(slurp(dir / (std::string("a") + ext)) ==
          slurp(dir / (std::string("b") + ext)));

  const SegmentedCircuit c = parse_gatelist(slurp(dir / "a.circuit"));
  CHECK(c.segments().size() == 5);
  CHECK(max_abs_diff(evaluate(c.flatten()),
                     dtqw_step(star_graph(8)).matrix()) <= 1e-8);
  const std::string s = slurp(dir / "a.summary.txt");
  CHECK(s.find("branch: real") != std::string::npos);
  CHECK(s.find("(pass)") != std::string::npos);
}

TEST_CASE("pipeline expands non-power-of-two input") {
  const fs::path dir = scratch_dir();
  write_matrix_file(dir / "walk6.txt", dtqw_step(star_graph(3)).matrix());
  RunConfig cfg;
  cfg.input = dir / "walk6.txt";
  cfg.prefix = (dir / "walk6").string();
  cfg.i_max = 20;
  cfg.j_max = 5;
  cfg.verify = true;
  std::ostringstream log;
  REQUIRE(run_pipeline(cfg, log) == 0);
  CHECK(log.str().find("dimension: 6 (expanded to 8)") != std::string::npos);
}

TEST_CASE("pipeline failures leave no artifacts") {
  const fs::path dir = scratch_dir();
  write_matrix_file(dir / "q4.txt", qft_matrix(4).matrix());
  RunConfig cfg;
  cfg.input = dir / "q4.txt";
  cfg.prefix = (dir / "fail").string();
  cfg.branch = BranchChoice::Real;
  cfg.i_max = 5;
  std::ostringstream log;
  CHECK_THROWS_AS(run_pipeline(cfg, log), RealBranchComplexInput);
  CHECK_FALSE(fs::exists(dir / "fail.circuit"));

  cfg.branch = BranchChoice::Auto;
  cfg.prefix = (dir / "missing_dir" / "x").string();
  CHECK_THROWS_AS(run_pipeline(cfg, log), IoError);
  CHECK_FALSE(fs::exists(dir / "missing_dir"));
}
