#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hdcrit/config.hpp"
#include "hdcrit/error.hpp"

namespace hdcrit {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

// Singular value decomposition A = U * diag(sigma) * V^*, with U and V square
// unitary (orthogonal for real scalars) and sigma descending of length
// min(rows, cols).
template <typename Scalar>
struct Svd {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RealVector = Eigen::Matrix<typename Eigen::NumTraits<Scalar>::Real, Eigen::Dynamic, 1>;

  Matrix U;
  RealVector sigma;
  Matrix V;

  Matrix reconstruct() const {
    Matrix S = Matrix::Zero(U.cols(), V.cols());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) S(i, i) = sigma(i);
    return U * S * V.adjoint();
  }
};

using SvdFactors = Svd<cplx>;

// diag(d) embedded in a rows x cols matrix (zeros off the main diagonal).
struct RealDiag {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  RVec d;

  CMat matrix() const;
};

CMat diag_matrix(const RVec& d, Eigen::Index rows, Eigen::Index cols);

inline double norm_floor(const CMat& A) { return std::max(1.0, A.norm()); }

void require_finite(const CMat& A);

// <A, B> = Tr(A B^*).
template <typename DA, typename DB>
cplx hermitian_inner(const Eigen::MatrixBase<DA>& A, const Eigen::MatrixBase<DB>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw Error(ErrorCode::ShapeMismatch, "hermitian_inner needs equal shapes");
  return cplx((A.derived().template cast<cplx>().array() *
               B.derived().template cast<cplx>().conjugate().array())
                  .sum());
}

// q(A, B) = Re <A, B>, the real inner product on the realification.
template <typename DA, typename DB>
double real_inner(const Eigen::MatrixBase<DA>& A, const Eigen::MatrixBase<DB>& B) {
  return hermitian_inner(A, B).real();
}

struct HermSkew {
  CMat hermitian;
  CMat skew;
};

HermSkew herm_skew_split(const CMat& A);

// Real basis of the skew-Hermitian n x n matrices (the Lie algebra u(n)):
// i*E_kk, E_kl - E_lk and i*(E_kl + E_lk) for k < l.
std::vector<CMat> skew_basis(Eigen::Index n);

// Haar-distributed unitary (QR of a complex Ginibre matrix, R's diagonal made
// positive). Deterministic for a fixed seed.
CMat random_unitary(Eigen::Index n, std::uint64_t seed);
CMat random_unitary(Eigen::Index n, Rng& rng);

// Complex Ginibre matrix with i.i.d. standard complex normal entries.
CMat random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Flattens A into R^{2 rows cols}: for each entry in column-major order, real
// part followed by imaginary part. q(A, B) equals the dot product of these.
RVec real_coordinates(const CMat& A);
CMat from_real_coordinates(const RVec& z, Eigen::Index rows, Eigen::Index cols);

// Stacks real_coordinates of each matrix as a column.
RMat stack_real_coordinates(const std::vector<CMat>& mats);

// Number of singular values above rel_tol * sigma_max.
Eigen::Index numerical_rank(const RMat& M, double rel_tol);

// Orthonormal basis (columns) of the numerical nullspace of M.
RMat nullspace(const RMat& M, double rel_tol);

namespace detail {

// Rotate each singular triple so the largest-magnitude entry of the right
// singular vector is real positive; ties go to the lowest index. Columns of V
// beyond sigma.size() are normalized alone.
template <typename Scalar>
void apply_phase_convention(Svd<Scalar>& f) {
  using std::abs;
  for (Eigen::Index i = 0; i < f.V.cols(); ++i) {
    auto v = f.V.col(i);
    double best = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) best = std::max(best, double(abs(v(k))));
    if (best == 0.0) continue;
    Eigen::Index pick = 0;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (double(abs(v(k))) >= best * (1.0 - 1e-12)) {
        pick = k;
        break;
      }
    }
    const Scalar phase = v(pick) / Scalar(abs(v(pick)));
    const Scalar undo = Eigen::numext::conj(phase);
    f.V.col(i) *= undo;
    if (i < f.sigma.size()) f.U.col(i) *= undo;
  }
}

// Modified Gram-Schmidt, applied in place to the leading k columns.
template <typename Matrix>
void orthonormalize_leading(Matrix& Q, Eigen::Index k) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) Q.col(i) -= Q.col(j) * Q.col(j).dot(Q.col(i));
      Q.col(i) /= Q.col(i).norm();
    }
  }
}

}  // namespace detail

// One-sided (Hestenes) Jacobi SVD. Works for real and complex scalars.
//
// The rows of A are orthogonalized by plane rotations applied to the columns
// of A^*; the accumulated rotations form U. Right singular vectors are the
// normalized rotated columns, completed to a full unitary by a Householder QR.
// Throws ConvergenceFailure after `max_sweeps` sweeps.
template <typename Derived>
Svd<typename Derived::Scalar> jacobi_svd(const Eigen::MatrixBase<Derived>& A,
                                         int max_sweeps = default_tolerances().svd_max_sweeps) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Matrix = typename Svd<Scalar>::Matrix;
  using Eigen::Index;

  const Index n = A.rows();
  const Index t = A.cols();
  if (n == 0 || t == 0) throw Error(ErrorCode::InvalidArgument, "empty matrix");

  if (n > t) {
    Svd<Scalar> g = jacobi_svd(A.adjoint().eval(), max_sweeps);
    Svd<Scalar> out{std::move(g.V), std::move(g.sigma), std::move(g.U)};
    detail::apply_phase_convention(out);
    return out;
  }

  Matrix G = A.adjoint();  // t x n, one column per row of A
  Matrix J = Matrix::Identity(n, n);
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real threshold = eps * Real(std::max<Index>(n, 4));

  bool converged = n == 1;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    bool rotated = false;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Real alpha = G.col(p).squaredNorm();
        const Real beta = G.col(q).squaredNorm();
        const Scalar gamma = G.col(p).dot(G.col(q));
        const Real mag = Eigen::numext::abs(gamma);
        if (mag == Real(0) || mag <= threshold * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Real zeta = (beta - alpha) / (Real(2) * mag);
        const Real tn = (zeta >= 0 ? Real(1) : Real(-1)) / (std::abs(zeta) + std::sqrt(Real(1) + zeta * zeta));
        const Real c = Real(1) / std::sqrt(Real(1) + tn * tn);
        const Real s = c * tn;
        const Scalar phase = gamma / Scalar(mag);
        const Scalar phase_c = Eigen::numext::conj(phase);
        for (Matrix* M : {&G, &J}) {
          auto cp = M->col(p).eval();
          auto cq = M->col(q).eval();
          M->col(p) = Scalar(c) * cp - Scalar(s) * phase_c * cq;
          M->col(q) = Scalar(s) * phase * cp + Scalar(c) * cq;
        }
      }
    }
    converged = !rotated;
  }
  if (!converged) throw Error(ErrorCode::ConvergenceFailure, "Jacobi sweeps exhausted");

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  RVec norms(n);
  for (Index i = 0; i < n; ++i) norms(i) = double(G.col(i).norm());
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return norms(a) > norms(b); });

  Svd<Scalar> out;
  out.sigma.resize(n);
  out.U.resize(n, n);
  Matrix Q(t, n);
  for (Index i = 0; i < n; ++i) {
    out.sigma(i) = Real(norms(order[i]));
    out.U.col(i) = J.col(order[i]);
    Q.col(i) = G.col(order[i]);
  }

  const Real sigma_max = out.sigma(0);
  Index k = 0;
  while (k < n && out.sigma(k) > sigma_max * threshold * Real(t) && out.sigma(k) > std::numeric_limits<Real>::min())
    ++k;
  for (Index i = 0; i < k; ++i) Q.col(i) /= out.sigma(i);
  detail::orthonormalize_leading(Q, k);

  out.V = Matrix::Identity(t, t);
  if (k > 0) {
    Eigen::HouseholderQR<Matrix> qr(Q.leftCols(k));
    Matrix full = qr.householderQ() * Matrix::Identity(t, t);
    out.V.leftCols(k) = Q.leftCols(k);
    out.V.rightCols(t - k) = full.rightCols(t - k);
    detail::orthonormalize_leading(out.V, t);
  }
  detail::apply_phase_convention(out);
  return out;
}

// Complex SVD with the project-wide conventions (see jacobi_svd).
SvdFactors svd(const CMat& A);

// Residuals of the SvdFactors invariants for a factored matrix A.
struct SvdCheck {
  double u_orthonormality = 0.0;
  double v_orthonormality = 0.0;
  double reconstruction = 0.0;  // relative to max(1, ||A||_F)
  bool descending = true;
};

SvdCheck check_svd(const SvdFactors& f, const CMat& A);

}  // namespace hdcrit
