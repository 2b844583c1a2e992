#include "hdcrit/lift.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hdcrit/verify.hpp"

namespace hdcrit {

namespace {

bool has_close_spectrum(const RVec& sigma, double rel) {
  const double top = sigma.size() ? sigma(0) : 0.0;
  for (Eigen::Index i = 1; i < sigma.size(); ++i)
    if (sigma(i - 1) - sigma(i) <= rel * std::max(1.0, top)) return true;
  return false;
}

HdCriticalPoint make_point(const CMat& Y, const SvdFactors& f, const RVec& x, const RMat& slice_tangent, double tol) {
  const Eigen::Index n = Y.rows(), t = Y.cols();
  HdCriticalPoint p;
  p.source_x = x;
  p.X = f.U * diag_matrix(x, n, t) * f.V.adjoint();
  p.distance_sq = (Y - p.X).squaredNorm();
  const TangentFrame frame = tangent_frame(f.U, x, f.V, slice_tangent);
  const CriticalityResult cr = is_hd_critical(Y, p.X, frame, tol);
  p.residual = cr.max_residual;
  if (!cr.ok) {
    std::ostringstream msg;
    msg << "lifted point failed the criticality check (residual " << cr.max_residual << ")";
    throw Error(ErrorCode::VerificationFailure, msg.str());
  }
  return p;
}

}  // namespace

std::vector<HdCriticalPoint> lift_critical(const CMat& Y, const SliceFamily& family, const Tolerances& tol) {
  require_finite(Y);
  const SvdFactors f = svd(Y);
  const RVec& y = f.sigma;
  if (y.size() != dimension(family))
    throw Error(ErrorCode::ShapeMismatch, "family dimension must equal min(rows, cols) of Y");

  const GenericityReport gen = genericity_check(family, y, tol.genericity_eps);
  if (!gen.lift_ok) throw Error(ErrorCode::DegenerateSpectrum, "singular values of Y must be nonzero and distinct");
  if (!gen.slice_ok) {
    std::string why;
    for (const auto& r : gen.reasons) why += " " + r + ";";
    throw Error(ErrorCode::NonGenericData, "sigma(Y) is not generic:" + why);
  }
  const bool close = has_close_spectrum(y, tol.close_spectrum_warning);

  const EdCriticalSet set = ed_critical(family, y, tol);
  std::vector<HdCriticalPoint> out;
  out.reserve(set.points.size());
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    const RVec& x = set.points[i];
    HdCriticalPoint p = make_point(Y, f, x, tangent_basis(family, x, set.branches[i]), tol.criticality);
    p.branch = set.branches[i];
    p.at_singular = set.at_singular[i];
    p.close_spectrum = close;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<HdCriticalPoint> eckart_young(const CMat& Y, int k, const Tolerances& tol) {
  require_finite(Y);
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const SvdFactors f = svd(Y);
  const RVec& s = f.sigma;
  const Eigen::Index m = s.size();
  int r = 0;
  while (r < m && s(r) > tol.eckart_young_rank * s(0)) ++r;
  if (k > r) throw Error(ErrorCode::RankTooSmall, "k exceeds the numerical rank " + std::to_string(r));
  for (int i = 1; i < r; ++i)
    if (s(i - 1) - s(i) <= tol.eckart_young_rank * s(0))
      throw Error(ErrorCode::DegenerateSpectrum, "nonzero singular values must be distinct");
  const bool close = has_close_spectrum(s.head(r), tol.close_spectrum_warning);

  const RankAtMost family{int(m), k};
  std::vector<HdCriticalPoint> out;
  std::vector<int> mask(static_cast<std::size_t>(r), 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    RVec x = RVec::Zero(m);
    for (int i = 0; i < r; ++i)
      if (mask[static_cast<std::size_t>(i)]) x(i) = s(i);
    HdCriticalPoint p = make_point(Y, f, x, tangent_basis(family, x), tol.criticality);
    p.close_spectrum = close;
    out.push_back(std::move(p));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

HdPoly hd_poly(const CMat& Y, int r) {
  require_finite(Y);
  const RVec s = svd(Y).sigma;
  const int m = static_cast<int>(s.size());
  if (m > 16) throw Error(ErrorCode::InvalidArgument, "hd_poly supports min(rows, cols) <= 16");
  if (r < 1 || r > m) throw Error(ErrorCode::InvalidArgument, "hd_poly needs 1 <= r <= min(rows, cols)");
  const RVec sq = s.array().square();
  RPoly p = RPoly::constant(1.0);
  std::vector<int> mask(static_cast<std::size_t>(m), 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  do {
    double omitted = 0.0;
    for (int i = 0; i < m; ++i)
      if (!mask[static_cast<std::size_t>(i)]) omitted += sq(i);
    p = p * RPoly{-omitted, 1.0};
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return {p};
}

SimCheck sim_decomposition_check(const CMat& Y, const CMat& X, double tol) {
  if (Y.rows() != X.rows() || Y.cols() != X.cols()) throw Error(ErrorCode::ShapeMismatch, "Y and X differ in shape");
  const SvdFactors f = svd(Y);
  const RVec& s = f.sigma;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) <= 1e-10 * std::max(1.0, s(0)))
      throw Error(ErrorCode::DegenerateSpectrum, "Y has a zero singular value");
    if (i > 0 && s(i - 1) - s(i) <= 1e-10 * std::max(1.0, s(0)))
      throw Error(ErrorCode::DegenerateSpectrum, "Y has repeated singular values");
  }
  const CMat A = f.U.adjoint() * X * f.V;
  SimCheck out;
  out.A.rows = A.rows();
  out.A.cols = A.cols();
  out.A.d.resize(std::min(A.rows(), A.cols()));
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
      if (i == j) {
        out.A.d(i) = A(i, i).real();
        out.imag_diagonal = std::max(out.imag_diagonal, std::abs(A(i, i).imag()));
      } else {
        out.off_diagonal = std::max(out.off_diagonal, std::abs(A(i, j)));
      }
    }
  const double bound = tol * std::max(1.0, X.norm());
  out.ok = out.off_diagonal <= bound && out.imag_diagonal <= bound;
  return out;
}

}  // namespace hdcrit
