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

#include "csdopt/linalg.hpp"

#include <bit>
#include <sstream>

#include "csdopt/errors.hpp"

namespace csdopt {

double unitarity_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("unitarity check needs a square matrix, got " +
                     std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
  const ComplexMatrix prod = m * m.adjoint();
  const ComplexMatrix diff =
      prod - ComplexMatrix::Identity(m.rows(), m.cols());
  return m.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_deviation(m) <= tol;
}

bool has_zero_imaginary(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return false;
  return true;
}

bool is_power_of_two(std::size_t m) { return std::has_single_bit(m); }

std::size_t next_power_of_two(std::size_t m) {
  return m <= 1 ? 1 : std::bit_ceil(m);
}

int qubit_count(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw ShapeError("dimension " + std::to_string(dim) +
                     " is not a power of two");
  }
  return std::countr_zero(dim);
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix entries, double tol)
    : m_(std::move(entries)) {
  if (m_.rows() == 0) throw ShapeError("empty matrix");
  const double dev = unitarity_deviation(m_);
  if (!(dev <= tol)) {
    std::ostringstream os;
    os << "matrix is not unitary: max |U U^dagger - I| = " << dev
       << " exceeds tolerance " << tol;
    throw NotUnitary(os.str(), dev);
  }
  real_ = has_zero_imaginary(m_);
}

UnitaryMatrix::UnitaryMatrix(const RealMatrix& entries, double tol)
    : UnitaryMatrix(ComplexMatrix(entries.cast<Complex>()), tol) {}

UnitaryMatrix UnitaryMatrix::trusted(ComplexMatrix entries) {
  UnitaryMatrix u;
  u.m_ = std::move(entries);
  u.real_ = has_zero_imaginary(u.m_);
  return u;
}

UnitaryMatrix expand_to_power_of_two(const UnitaryMatrix& u) {
  const std::size_t m = u.dim();
  if (is_power_of_two(m)) return u;
  const auto padded = static_cast<Eigen::Index>(next_power_of_two(m));
  ComplexMatrix out = ComplexMatrix::Identity(padded, padded);
  const auto mi = static_cast<Eigen::Index>(m);
  out.topLeftCorner(mi, mi) = u.matrix();
  return UnitaryMatrix::trusted(std::move(out));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("shape mismatch in comparison");
  }
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

}  // namespace csdopt
