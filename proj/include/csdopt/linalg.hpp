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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

namespace csdopt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Default tolerance for input unitarity validation.
inline constexpr double kUnitarityTol = 1e-10;

/// max |M M^dagger - I| over all entries. Throws ShapeError if M is not
/// square.
double unitarity_deviation(const ComplexMatrix& m);

bool is_unitary(const ComplexMatrix& m, double tol = kUnitarityTol);

/// True iff every entry has an exactly zero imaginary part.
bool has_zero_imaginary(const ComplexMatrix& m);

bool is_power_of_two(std::size_t m);

/// Smallest power of two >= m (m >= 1).
std::size_t next_power_of_two(std::size_t m);

/// log2 of a power of two.
int qubit_count(std::size_t dim);

/// A dense square matrix known to be unitary.
///
/// Construction validates U U^dagger = I to the given tolerance and throws
/// NotUnitary otherwise. `is_real()` is true iff all imaginary parts are
/// exactly zero. Immutable after construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix entries, double tol = kUnitarityTol);
  explicit UnitaryMatrix(const RealMatrix& entries,
                         double tol = kUnitarityTol);

  /// Wraps a matrix that is unitary by construction (a permutation or
  /// padding of an already validated matrix). Skips the O(m^3) check.
  static UnitaryMatrix trusted(ComplexMatrix entries);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  bool is_real() const { return real_; }
  const ComplexMatrix& matrix() const { return m_; }
  RealMatrix real_part() const { return m_.real(); }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

 private:
  UnitaryMatrix() = default;

  ComplexMatrix m_;
  bool real_ = false;
};

/// Pads U to the next power-of-two dimension with identity on the extra
/// basis states; returns U unchanged when already a power of two.
UnitaryMatrix expand_to_power_of_two(const UnitaryMatrix& u);

/// Largest absolute entry-wise difference; throws ShapeError on mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace csdopt
