#include "hdcrit/cxmat.hpp"

namespace hdcrit {

CMat RealDiag::matrix() const { return diag_matrix(d, rows, cols); }

CMat diag_matrix(const RVec& d, Eigen::Index rows, Eigen::Index cols) {
  if (d.size() > std::min(rows, cols))
    throw Error(ErrorCode::ShapeMismatch, "diagonal longer than min(rows, cols)");
  CMat D = CMat::Zero(rows, cols);
  for (Eigen::Index i = 0; i < d.size(); ++i) D(i, i) = d(i);
  return D;
}

void require_finite(const CMat& A) {
  if (!A.allFinite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
}

HermSkew herm_skew_split(const CMat& A) {
  if (A.rows() != A.cols()) throw Error(ErrorCode::NotSquare, "herm_skew_split needs a square matrix");
  const CMat Ah = A.adjoint();
  HermSkew out{0.5 * (A + Ah), CMat()};
  // K = A - H keeps H + K == A exactly.
  out.skew = A - out.hermitian;
  return out;
}

std::vector<CMat> skew_basis(Eigen::Index n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "skew_basis needs n >= 1");
  const cplx I(0.0, 1.0);
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index k = 0; k < n; ++k) {
    CMat Z = CMat::Zero(n, n);
    Z(k, k) = I;
    basis.push_back(std::move(Z));
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = k + 1; l < n; ++l) {
      CMat Z = CMat::Zero(n, n);
      Z(k, l) = 1.0;
      Z(l, k) = -1.0;
      basis.push_back(std::move(Z));
      CMat W = CMat::Zero(n, n);
      W(k, l) = I;
      W(l, k) = I;
      basis.push_back(std::move(W));
    }
  }
  return basis;
}

CMat random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMat G(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      G(i, j) = cplx(re, im);
    }
  return G;
}

CMat random_unitary(Eigen::Index n, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "random_unitary needs n >= 1");
  const CMat G = random_ginibre(n, n, rng);
  Eigen::HouseholderQR<CMat> qr(G);
  CMat Q = qr.householderQ() * CMat::Identity(n, n);
  const CMat& R = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(R(j, j));
    if (mag > 0.0) Q.col(j) *= R(j, j) / mag;
  }
  return Q;
}

CMat random_unitary(Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

RVec real_coordinates(const CMat& A) {
  RVec z(2 * A.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      z(k++) = A(i, j).real();
      z(k++) = A(i, j).imag();
    }
  return z;
}

CMat from_real_coordinates(const RVec& z, Eigen::Index rows, Eigen::Index cols) {
  if (z.size() != 2 * rows * cols) throw Error(ErrorCode::ShapeMismatch, "coordinate length mismatch");
  CMat A(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      A(i, j) = cplx(z(k), z(k + 1));
      k += 2;
    }
  return A;
}

RMat stack_real_coordinates(const std::vector<CMat>& mats) {
  if (mats.empty()) return RMat();
  RMat M(2 * mats.front().size(), static_cast<Eigen::Index>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) M.col(static_cast<Eigen::Index>(j)) = real_coordinates(mats[j]);
  return M;
}

Eigen::Index numerical_rank(const RMat& M, double rel_tol) {
  if (M.size() == 0) return 0;
  Eigen::BDCSVD<RMat> dec(M);
  const RVec& s = dec.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

RMat nullspace(const RMat& M, double rel_tol) {
  Eigen::BDCSVD<RMat> dec(M, Eigen::ComputeFullV);
  const RVec& s = dec.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (top > 0.0 && s(i) > rel_tol * top) ++r;
  return dec.matrixV().rightCols(M.cols() - r);
}

SvdFactors svd(const CMat& A) {
  require_finite(A);
  return jacobi_svd(A);
}

SvdCheck check_svd(const SvdFactors& f, const CMat& A) {
  SvdCheck c;
  c.u_orthonormality = (f.U.adjoint() * f.U - CMat::Identity(f.U.cols(), f.U.cols())).norm();
  c.v_orthonormality = (f.V.adjoint() * f.V - CMat::Identity(f.V.cols(), f.V.cols())).norm();
  c.reconstruction = (f.reconstruct() - A).norm() / norm_floor(A);
  for (Eigen::Index i = 0; i + 1 < f.sigma.size(); ++i)
    if (f.sigma(i) < f.sigma(i + 1)) c.descending = false;
  if (f.sigma.size() > 0 && f.sigma.minCoeff() < 0.0) c.descending = false;
  return c;
}

}  // namespace hdcrit
