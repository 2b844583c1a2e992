#pragma once

#include <vector>

#include "hdcrit/config.hpp"
#include "hdcrit/cxmat.hpp"
#include "hdcrit/polynomial.hpp"
#include "hdcrit/slices.hpp"

namespace hdcrit {

struct HdCriticalPoint {
  CMat X;
  RVec source_x;
  double distance_sq = 0.0;  // q(Y - X, Y - X)
  double residual = 0.0;     // HD-criticality residual
  int branch = -1;
  bool at_singular = false;
  bool close_spectrum = false;  // singular values of Y distinct but nearly equal
};

// U diag(x) V^* for every ED critical point x of sigma(Y) on S, using one SVD
// of Y. Throws DegenerateSpectrum for repeated or zero singular values and
// NonGenericData when sigma(Y) is on the family's discriminant. Each point is
// certified; VerificationFailure otherwise.
std::vector<HdCriticalPoint> lift_critical(const CMat& Y, const SliceFamily& family,
                                           const Tolerances& tol = default_tolerances());

// The binom(r, k) critical points U (Sigma_{i1} + ... + Sigma_{ik}) V^* on the
// rank <= k variety, k-subsets in lexicographic order (truncated SVD first).
std::vector<HdCriticalPoint> eckart_young(const CMat& Y, int k, const Tolerances& tol = default_tolerances());

// Monic polynomial in s = t^2 with roots sum_{j not in I} sigma_j^2 over r-subsets I.
struct HdPoly {
  RPoly coeffs_t2;

  int degree() const { return coeffs_t2.degree(); }
  double at_t(double t) const { return coeffs_t2(t * t); }
};

HdPoly hd_poly(const CMat& Y, int r);

struct SimCheck {
  bool ok = false;
  RealDiag A;
  double off_diagonal = 0.0;    // max off-diagonal |A_ij|
  double imag_diagonal = 0.0;   // max |Im A_ii|
};

// A = U^* X V in the SVD frame of Y must be a real diagonal matrix.
SimCheck sim_decomposition_check(const CMat& Y, const CMat& X, double tol);

}  // namespace hdcrit
