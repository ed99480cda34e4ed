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

#include "csdopt/csd.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <type_traits>

#include "csdopt/errors.hpp"

namespace csdopt {

std::string_view to_string(Branch b) {
  return b == Branch::Real ? "real" : "complex";
}

std::string_view to_string(CsdMethod m) {
  return m == CsdMethod::Lapack ? "lapack" : "jacobi";
}

CsdMethod default_method(Branch b) {
  return b == Branch::Real ? CsdMethod::Lapack : CsdMethod::Jacobi;
}

namespace {

using Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// Columns whose norm falls below this are completed instead of normalised.
constexpr double kNegligibleNorm = 1e-14;
/// Pair orthogonality threshold, relative and per row of the columns.
constexpr double kJacobiTolPerRow = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 80;
constexpr double kLapackCheckTol = 1e-12;
/// Columns this small are zero for every purpose here; rotating them only
/// drifts into denormals.
constexpr double kVanishingSquaredNorm = 1e-200;

template <class S>
constexpr bool kIsComplex = !std::is_same_v<S, double>;

template <class S>
S unit_direction(S g) {
  if constexpr (kIsComplex<S>) {
    const double a = std::abs(g);
    return a == 0.0 ? S(1.0) : g / a;
  } else {
    return g < 0.0 ? -1.0 : 1.0;
  }
}

/// One-sided (Hestenes) Jacobi on the columns `idx` of `w`: rotates column
/// pairs until they are mutually orthogonal, applying the same rotations to
/// every matrix in `followers`. Already orthogonal columns are left
/// untouched, which keeps structured inputs structured.
template <class S>
void one_sided_jacobi(Mat<S>& w, std::initializer_list<Mat<S>*> followers,
                      const std::vector<Index>& idx) {
  const double tol =
      kJacobiTolPerRow * static_cast<double>(std::max<Index>(w.rows(), 4));
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const Index i = idx[a];
        const Index j = idx[b];
        const double alpha = w.col(i).squaredNorm();
        const double beta = w.col(j).squaredNorm();
        const S gamma = w.col(i).dot(w.col(j));
        const double g = std::abs(gamma);
        if (g == 0.0 || std::min(alpha, beta) < kVanishingSquaredNorm ||
            g <= tol * std::sqrt(alpha) * std::sqrt(beta)) {
          continue;
        }
        rotated = true;
        // Rephase column j so the off-diagonal is real, then apply the real
        // rotation that zeroes it.
        S conj_ph = unit_direction(gamma);
        if constexpr (kIsComplex<S>) conj_ph = std::conj(conj_ph);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        auto rotate = [&](Mat<S>& mat) {
          for (Index r = 0; r < mat.rows(); ++r) {
            const S x = mat(r, i);
            const S y = mat(r, j) * conj_ph;
            mat(r, i) = c * x - s * y;
            mat(r, j) = s * x + c * y;
          }
        };
        rotate(w);
        for (Mat<S>* f : followers) rotate(*f);
      }
    }
    if (!rotated) return;
  }
  throw NumericalBreakdown("Jacobi SVD did not converge");
}

/// Turns the columns of `cols` (already scaled to unit length where
/// `keep[j]`) into an orthonormal basis. Kept columns are processed by
/// decreasing `weight`; the rest, and kept ones that turn out to be mostly
/// noise, are filled from the standard basis.
template <class S>
void orthonormal_completion(Mat<S>& cols, const std::vector<double>& weight,
                            std::vector<bool> keep) {
  const Index m = cols.cols();
  std::vector<Index> order;
  for (Index j = 0; j < m; ++j)
    if (keep[static_cast<std::size_t>(j)]) order.push_back(j);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return weight[static_cast<std::size_t>(a)] >
           weight[static_cast<std::size_t>(b)];
  });
  std::vector<Index> done;
  done.reserve(static_cast<std::size_t>(m));
  auto project_out = [&](Eigen::Matrix<S, Eigen::Dynamic, 1>& x) {
    for (int pass = 0; pass < 2; ++pass)
      for (Index k : done) x -= cols.col(k) * cols.col(k).dot(x);
  };
  for (Index j : order) {
    Eigen::Matrix<S, Eigen::Dynamic, 1> x = cols.col(j);
    project_out(x);
    const double nrm = x.norm();
    if (nrm < 0.5) {
      // Mostly rounding noise; its weight is tiny, so fill it like a zero.
      keep[static_cast<std::size_t>(j)] = false;
      continue;
    }
    cols.col(j) = x / nrm;
    done.push_back(j);
  }
  // Fill the rest from the standard basis vector that is least covered by
  // the span so far; its residual is at least sqrt(missing / m). covered[k]
  // is the squared norm of row k over the finished columns.
  std::vector<double> covered(static_cast<std::size_t>(m), 0.0);
  for (Index k : done)
    for (Index r = 0; r < m; ++r)
      covered[static_cast<std::size_t>(r)] += std::norm(cols(r, k));
  for (Index j = 0; j < m; ++j) {
    if (keep[static_cast<std::size_t>(j)]) continue;
    const auto best = static_cast<Index>(
        std::min_element(covered.begin(), covered.end()) - covered.begin());
    if (covered[static_cast<std::size_t>(best)] > 1.0 - 1e-12) {
      throw NumericalBreakdown("could not complete orthonormal basis");
    }
    Eigen::Matrix<S, Eigen::Dynamic, 1> x =
        Eigen::Matrix<S, Eigen::Dynamic, 1>::Unit(m, best);
    project_out(x);
    cols.col(j) = x / x.norm();
    done.push_back(j);
    for (Index r = 0; r < m; ++r)
      covered[static_cast<std::size_t>(r)] += std::norm(cols(r, j));
  }
}

template <class S>
struct Step {
  Mat<S> l0, l1, r0, r1;
  std::vector<double> theta;
};

template <class S>
Step<S> jacobi_step(const Mat<S>& x) {
  const Index m = x.rows() / 2;
  Step<S> st;
  Mat<S> w = x.topLeftCorner(m, m);
  Mat<S> v = Mat<S>::Identity(m, m);
  std::vector<Index> all(static_cast<std::size_t>(m));
  for (Index j = 0; j < m; ++j) all[static_cast<std::size_t>(j)] = j;
  one_sided_jacobi(w, {&v}, all);
  Mat<S> a = x.bottomLeftCorner(m, m) * v;
  // Sines near zero are invisible in the cosines; resolve them on the
  // bottom block instead.
  std::vector<Index> near_one;
  for (Index j = 0; j < m; ++j)
    if (w.col(j).squaredNorm() >= 0.5) near_one.push_back(j);
  one_sided_jacobi(a, {&w, &v}, near_one);

  std::vector<double> c(static_cast<std::size_t>(m)), s(c.size());
  std::vector<bool> keep_c(c.size()), keep_s(c.size());
  st.theta.resize(c.size());
  for (Index j = 0; j < m; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    double cj = w.col(j).norm();
    double sj = a.col(j).norm();
    keep_c[ju] = cj > kNegligibleNorm;
    keep_s[ju] = sj > kNegligibleNorm;
    if (keep_c[ju]) w.col(j) /= cj;
    if (keep_s[ju]) a.col(j) /= sj;
    const double r = std::hypot(cj, sj);
    c[ju] = cj / r;
    s[ju] = sj / r;
    st.theta[ju] = std::atan2(s[ju], c[ju]);
    c[ju] = std::cos(st.theta[ju]);
    s[ju] = std::sin(st.theta[ju]);
  }
  orthonormal_completion(w, c, keep_c);
  orthonormal_completion(a, s, keep_s);
  st.l0 = std::move(w);
  st.l1 = std::move(a);
  st.r0 = v.adjoint();
  const Mat<S> top = st.l0.adjoint() * x.topRightCorner(m, m);
  const Mat<S> bottom = st.l1.adjoint() * x.bottomRightCorner(m, m);
  st.r1.resize(m, m);
  for (Index j = 0; j < m; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    st.r1.row(j) = c[ju] * bottom.row(j) - s[ju] * top.row(j);
  }
  return st;
}

lapack_int lapack_csd(Mat<double>& x11, Mat<double>& x12, Mat<double>& x21,
                      Mat<double>& x22, Step<double>& st) {
  const auto p = static_cast<lapack_int>(x11.rows());
  return LAPACKE_dorcsd(LAPACK_COL_MAJOR, 'Y', 'Y', 'Y', 'Y', 'N', 'D', 2 * p,
                        p, p, x11.data(), p, x12.data(), p, x21.data(), p,
                        x22.data(), p, st.theta.data(), st.l0.data(), p,
                        st.l1.data(), p, st.r0.data(), p, st.r1.data(), p);
}

lapack_int lapack_csd(Mat<Complex>& x11, Mat<Complex>& x12, Mat<Complex>& x21,
                      Mat<Complex>& x22, Step<Complex>& st) {
  const auto p = static_cast<lapack_int>(x11.rows());
  return LAPACKE_zuncsd(LAPACK_COL_MAJOR, 'Y', 'Y', 'Y', 'Y', 'N', 'D', 2 * p,
                        p, p, x11.data(), p, x12.data(), p, x21.data(), p,
                        x22.data(), p, st.theta.data(), st.l0.data(), p,
                        st.l1.data(), p, st.r0.data(), p, st.r1.data(), p);
}

/// LAPACK's 2x2 partitioned CSD with the upper-right block made nonpositive,
/// which is exactly [C -S; S C].
template <class S>
Step<S> lapack_step(const Mat<S>& x) {
  const Index m = x.rows() / 2;
  Mat<S> x11 = x.topLeftCorner(m, m);
  Mat<S> x12 = x.topRightCorner(m, m);
  Mat<S> x21 = x.bottomLeftCorner(m, m);
  Mat<S> x22 = x.bottomRightCorner(m, m);
  Step<S> st;
  st.l0.resize(m, m);
  st.l1.resize(m, m);
  st.r0.resize(m, m);
  st.r1.resize(m, m);
  st.theta.resize(static_cast<std::size_t>(m));
  const lapack_int info = lapack_csd(x11, x12, x21, x22, st);
  if (info != 0) {
    throw NumericalBreakdown("LAPACK CS decomposition failed (info " +
                             std::to_string(info) + ")");
  }
  // A zero info does not rule out NaNs or a loose factorisation on
  // degenerate input, so check the blocks against the input.
  Eigen::VectorXd c(m), sn(m);
  for (Index j = 0; j < m; ++j) {
    c(j) = std::cos(st.theta[static_cast<std::size_t>(j)]);
    sn(j) = std::sin(st.theta[static_cast<std::size_t>(j)]);
  }
  const double err = std::max(
      {(st.l0 * c.asDiagonal() * st.r0 - x.topLeftCorner(m, m)).cwiseAbs().maxCoeff(),
       (st.l1 * sn.asDiagonal() * st.r0 - x.bottomLeftCorner(m, m)).cwiseAbs().maxCoeff(),
       (st.l0 * sn.asDiagonal() * st.r1 + x.topRightCorner(m, m)).cwiseAbs().maxCoeff(),
       (st.l1 * c.asDiagonal() * st.r1 - x.bottomRightCorner(m, m)).cwiseAbs().maxCoeff()});
  const bool finite = st.l0.allFinite() && st.l1.allFinite() &&
                      st.r0.allFinite() && st.r1.allFinite();
  if (!finite || !(err <= kLapackCheckTol)) {
    throw NumericalBreakdown("LAPACK CS decomposition is inaccurate");
  }
  return st;
}

/// LAPACK's bidiagonal CS iteration occasionally fails to converge on
/// highly structured blocks; the Jacobi step then takes over.
template <class S>
Step<S> csd_step_impl(const Mat<S>& x, CsdMethod method) {
  if (method == CsdMethod::Jacobi) return jacobi_step(x);
  try {
    return lapack_step(x);
  } catch (const NumericalBreakdown&) {
    return jacobi_step(x);
  }
}

/// A factor of the flattened recursion, in time order.
template <class S>
struct Factor {
  bool leaf = false;
  int target = 0;               // cut qubit (middle factors)
  std::vector<Mat<S>> blocks;   // 2x2 blocks (leaves)
  std::vector<double> theta;    // per state index with target bit 0
};

template <class S>
void flatten(std::vector<Mat<S>> blocks, int depth, int n, CsdMethod method,
             std::vector<Factor<S>>& out) {
  const Index size = blocks.front().rows();
  if (size == 2) {
    Factor<S> f;
    f.leaf = true;
    f.target = n;
    f.blocks = std::move(blocks);
    out.push_back(std::move(f));
    return;
  }
  const std::size_t nb = blocks.size();
  std::vector<Mat<S>> lefts(2 * nb), rights(2 * nb);
  Factor<S> mid;
  mid.target = depth + 1;
  const std::size_t dim = std::size_t{1} << n;
  mid.theta.assign(dim, 0.0);
  const std::size_t half = static_cast<std::size_t>(size / 2);
  for (std::size_t b = 0; b < nb; ++b) {
    Step<S> st = csd_step_impl(blocks[b], method);
    blocks[b].resize(0, 0);
    lefts[2 * b] = std::move(st.l0);
    lefts[2 * b + 1] = std::move(st.l1);
    rights[2 * b] = std::move(st.r0);
    rights[2 * b + 1] = std::move(st.r1);
    // Block b spans state indices [b*size, (b+1)*size); row j of its top
    // half pairs with row j+half.
    for (std::size_t j = 0; j < half; ++j)
      mid.theta[b * static_cast<std::size_t>(size) + j] = st.theta[j];
  }
  blocks.clear();
  flatten(std::move(rights), depth + 1, n, method, out);
  out.push_back(std::move(mid));
  flatten(std::move(lefts), depth + 1, n, method, out);
}

/// Converts a state index into a qubit-indexed control value.
std::uint32_t controls_from_state(std::size_t x, int n) {
  std::uint32_t v = 0;
  for (int k = 1; k <= n; ++k)
    if ((x >> (n - k)) & 1U) v |= 1U << (k - 1);
  return v;
}

std::uint32_t all_but(int n, int target) {
  return ((1U << n) - 1U) & ~(1U << (target - 1));
}

/// Mask over qubits 1..t-1.
std::uint32_t prefix_mask(int t) { return (1U << (t - 1)) - 1U; }

bool nonzero(double angle) { return std::abs(angle) >= kZeroAngleTol; }

template <class S>
void emit_middle(const Factor<S>& f, int n, Circuit& out) {
  const std::size_t tb = std::size_t{1} << (n - f.target);
  const std::uint32_t mask = all_but(n, f.target);
  for (std::size_t x = 0; x < f.theta.size(); ++x) {
    if (x & tb) continue;
    const double angle = 2.0 * f.theta[x];
    if (!nonzero(angle)) continue;
    out.append(Gate::rotation(GateKind::RY, f.target, angle, mask,
                              controls_from_state(x, n)));
  }
}

/// Leaf handling for the complex branch. `carry` is the diagonal handed
/// over from the previous leaf; on return it holds the diagonal for the next
/// one.
void emit_leaf(const Factor<Complex>& f, int n, int next_target,
               std::vector<Complex>& carry, Circuit& out) {
  const std::size_t dim = carry.size();
  const std::uint32_t leaf_mask = all_but(n, n);
  std::vector<Complex> diag(dim);
  std::vector<Gate> rz, ry;
  for (std::size_t cidx = 0; cidx < f.blocks.size(); ++cidx) {
    ComplexMatrix b = f.blocks[cidx];
    b.col(0) *= carry[2 * cidx];
    b.col(1) *= carry[2 * cidx + 1];
    const LeafDecomposition d = decompose_leaf_complex(b);
    const std::uint32_t ctrl = controls_from_state(2 * cidx, n);
    if (nonzero(d.beta))
      rz.push_back(Gate::rotation(GateKind::RZ, n, d.beta, leaf_mask, ctrl));
    if (nonzero(d.theta))
      ry.push_back(Gate::rotation(GateKind::RY, n, d.theta, leaf_mask, ctrl));
    // e^{i phase} Rz(alpha) is what remains on the left of the block.
    diag[2 * cidx] = std::polar(1.0, d.phase - d.alpha / 2.0);
    diag[2 * cidx + 1] = std::polar(1.0, d.phase + d.alpha / 2.0);
  }
  for (const auto& g : rz) out.append(g);
  for (const auto& g : ry) out.append(g);

  if (next_target > 0) {
    const std::size_t kb = std::size_t{1} << (n - next_target);
    const std::uint32_t mask = all_but(n, next_target);
    for (std::size_t x0 = 0; x0 < dim; ++x0) {
      if (x0 & kb) continue;
      const std::size_t x1 = x0 | kb;
      const double psi = std::arg(diag[x1] * std::conj(diag[x0]));
      if (nonzero(psi)) {
        out.append(Gate::rotation(GateKind::RZ, next_target, psi, mask,
                                  controls_from_state(x0, n)));
        carry[x0] = carry[x1] = diag[x0] * std::polar(1.0, psi / 2.0);
      } else {
        carry[x0] = carry[x1] = diag[x0];
      }
    }
    return;
  }
  for (int t = n; t >= 1; --t) {
    const std::size_t tb = std::size_t{1} << (n - t);
    const std::size_t low = tb - 1;  // qubits t+1..n, already folded away
    for (std::size_t x0 = 0; x0 < dim; ++x0) {
      if ((x0 & tb) || (x0 & low)) continue;
      const std::size_t x1 = x0 | tb;
      const double psi = std::arg(diag[x1] * std::conj(diag[x0]));
      if (!nonzero(psi)) continue;
      out.append(Gate::rotation(GateKind::RZ, t, psi, prefix_mask(t),
                                controls_from_state(x0, n)));
      diag[x0] *= std::polar(1.0, psi / 2.0);
    }
  }
  const double global = std::arg(diag[0]);
  if (nonzero(global)) out.append(Gate::rotation(GateKind::PHASE, 1, global));
}

/// Real-branch counterpart: the diagonal is a sign vector and the split
/// emits controlled Z gates.
void emit_leaf(const Factor<double>& f, int n, int next_target,
               std::vector<double>& carry, Circuit& out) {
  const std::size_t dim = carry.size();
  const std::uint32_t leaf_mask = all_but(n, n);
  std::vector<double> diag(dim);
  for (std::size_t cidx = 0; cidx < f.blocks.size(); ++cidx) {
    RealMatrix b = f.blocks[cidx];
    b.col(0) *= carry[2 * cidx];
    b.col(1) *= carry[2 * cidx + 1];
    const LeafDecomposition d = decompose_leaf_real(b);
    // Ry(theta) Z = Z Ry(-theta), so the block is diag(1, +-1) Ry(a). The
    // angle is left unwrapped so the left sign stays +1.
    const double a = d.reflect ? -d.theta : d.theta;
    const double d0 = 1.0;
    const double d1 = d.reflect ? -1.0 : 1.0;
    if (nonzero(a)) {
      out.append(Gate::rotation(GateKind::RY, n, a, leaf_mask,
                                controls_from_state(2 * cidx, n)));
    }
    diag[2 * cidx] = d0;
    diag[2 * cidx + 1] = d1;
  }

  if (next_target > 0) {
    const std::size_t kb = std::size_t{1} << (n - next_target);
    const std::uint32_t mask = all_but(n, next_target);
    for (std::size_t x0 = 0; x0 < dim; ++x0) {
      if (x0 & kb) continue;
      const std::size_t x1 = x0 | kb;
      if (diag[x1] != diag[x0]) {
        out.append(Gate::z(next_target, mask, controls_from_state(x0, n)));
      }
      carry[x0] = carry[x1] = diag[x0];
    }
    return;
  }
  for (int t = n; t >= 1; --t) {
    const std::size_t tb = std::size_t{1} << (n - t);
    const std::size_t low = tb - 1;
    for (std::size_t x0 = 0; x0 < dim; ++x0) {
      if ((x0 & tb) || (x0 & low)) continue;
      if (diag[x0 | tb] != diag[x0]) {
        out.append(Gate::z(t, prefix_mask(t), controls_from_state(x0, n)));
      }
    }
  }
}

template <class S>
Circuit decompose_impl(const Mat<S>& u, CsdMethod method) {
  const auto dim = static_cast<std::size_t>(u.rows());
  const int n = qubit_count(dim);
  Circuit out(n);
  std::vector<Factor<S>> factors;
  if (n == 1) {
    Factor<S> f;
    f.leaf = true;
    f.target = 1;
    f.blocks.push_back(u);
    factors.push_back(std::move(f));
  } else {
    std::vector<Mat<S>> top;
    top.push_back(u);
    flatten(std::move(top), 0, n, method, factors);
  }
  std::vector<S> carry(dim, S(1.0));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (!f.leaf) {
      emit_middle(f, n, out);
      continue;
    }
    const int next = i + 1 < factors.size() ? factors[i + 1].target : 0;
    emit_leaf(f, n, next, carry, out);
  }
  return out;
}

void check_square_power_of_two(Index rows, Index cols) {
  if (rows != cols || rows < 2 ||
      !is_power_of_two(static_cast<std::size_t>(rows))) {
    throw ShapeError("decomposition needs a 2^n x 2^n matrix with n >= 1, got " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
}

}  // namespace

ComplexMatrix CsdBlocks::reassemble() const {
  const auto m = left_top.rows();
  ComplexMatrix left = ComplexMatrix::Zero(2 * m, 2 * m);
  ComplexMatrix right = ComplexMatrix::Zero(2 * m, 2 * m);
  ComplexMatrix mid = ComplexMatrix::Zero(2 * m, 2 * m);
  left.topLeftCorner(m, m) = left_top;
  left.bottomRightCorner(m, m) = left_bottom;
  right.topLeftCorner(m, m) = right_top;
  right.bottomRightCorner(m, m) = right_bottom;
  for (Index j = 0; j < m; ++j) {
    const double c = std::cos(angles[static_cast<std::size_t>(j)]);
    const double s = std::sin(angles[static_cast<std::size_t>(j)]);
    mid(j, j) = c;
    mid(j + m, j + m) = c;
    mid(j, j + m) = -s;
    mid(j + m, j) = s;
  }
  return left * mid * right;
}

CsdBlocks csd_step(const UnitaryMatrix& u, CsdMethod method) {
  const auto dim = static_cast<Index>(u.dim());
  if (dim < 4 || dim % 2 != 0) {
    throw ShapeError("cosine-sine step needs an even dimension >= 4, got " +
                     std::to_string(dim));
  }
  Step<Complex> st = csd_step_impl<Complex>(u.matrix(), method);
  return CsdBlocks{std::move(st.l0), std::move(st.l1), std::move(st.theta),
                   std::move(st.r0), std::move(st.r1)};
}

ComplexMatrix LeafDecomposition::matrix() const {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  ComplexMatrix ry(2, 2);
  ry << c, -s, s, c;
  if (reflect) {
    ComplexMatrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    return ry * z;
  }
  ComplexMatrix rza = ComplexMatrix::Zero(2, 2);
  rza(0, 0) = std::polar(1.0, -alpha / 2.0);
  rza(1, 1) = std::polar(1.0, alpha / 2.0);
  ComplexMatrix rzb = ComplexMatrix::Zero(2, 2);
  rzb(0, 0) = std::polar(1.0, -beta / 2.0);
  rzb(1, 1) = std::polar(1.0, beta / 2.0);
  return std::polar(1.0, phase) * rza * ry * rzb;
}

LeafDecomposition decompose_leaf_complex(const ComplexMatrix& u2) {
  if (u2.rows() != 2 || u2.cols() != 2) throw ShapeError("leaf must be 2x2");
  LeafDecomposition d;
  const Complex det = u2.determinant();
  d.phase = std::arg(det) / 2.0;
  const Complex unphase = std::polar(1.0, -d.phase);
  // V = e^{-i phase} U = [[a, -conj(b)], [b, conj(a)]].
  const Complex a = u2(0, 0) * unphase;
  const Complex b = u2(1, 0) * unphase;
  const double abs_a = std::abs(a);
  const double abs_b = std::abs(b);
  d.theta = 2.0 * std::atan2(abs_b, abs_a);
  constexpr double kTiny = 1e-14;
  if (abs_b < kTiny) {
    d.alpha = -2.0 * std::arg(a);
  } else if (abs_a < kTiny) {
    d.alpha = 2.0 * std::arg(b);
  } else {
    const double arg_a = std::arg(a);
    const double arg_b = std::arg(b);
    d.alpha = arg_b - arg_a;
    d.beta = -arg_a - arg_b;
  }
  return d;
}

LeafDecomposition decompose_leaf_real(const RealMatrix& o2) {
  if (o2.rows() != 2 || o2.cols() != 2) throw ShapeError("leaf must be 2x2");
  LeafDecomposition d;
  d.reflect = o2.determinant() < 0.0;
  d.theta = 2.0 * std::atan2(o2(1, 0), o2(0, 0));
  return d;
}

Circuit decompose_real(const RealMatrix& u, CsdMethod method) {
  check_square_power_of_two(u.rows(), u.cols());
  return decompose_impl<double>(u, method);
}

Circuit decompose_complex(const ComplexMatrix& u, CsdMethod method) {
  check_square_power_of_two(u.rows(), u.cols());
  return decompose_impl<Complex>(u, method);
}

Circuit decompose(const UnitaryMatrix& u, Branch branch, CsdMethod method) {
  if (branch == Branch::Real) {
    if (!u.is_real()) {
      throw RealBranchComplexInput(
          "real branch requested but the matrix has nonzero imaginary parts");
    }
    return decompose_real(u.real_part(), method);
  }
  return decompose_complex(u.matrix(), method);
}

Circuit decompose(const UnitaryMatrix& u, Branch branch) {
  return decompose(u, branch, default_method(branch));
}

Circuit decompose(const PermutationMatrix& p, CsdMethod method) {
  return decompose_real(p.dense(), method);
}

std::size_t csd_gate_count(const UnitaryMatrix& u, Branch branch,
                           CsdMethod method) {
  return reduce(decompose(u, branch, method)).gate_count();
}

std::size_t csd_gate_count(const UnitaryMatrix& u, Branch branch) {
  return csd_gate_count(u, branch, default_method(branch));
}

std::size_t csd_gate_count(const PermutationMatrix& p, CsdMethod method) {
  return reduce(decompose(p, method)).gate_count();
}

}  // namespace csdopt
