#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "hdcrit/bipoly.hpp"
#include "hdcrit/config.hpp"
#include "hdcrit/cxmat.hpp"

namespace hdcrit {

// {x : at most r nonzero entries}; sigma^{-1} is the rank <= r variety.
struct RankAtMost {
  int n = 0;
  int r = 0;
};

// {(+-1, ..., +-1)}; sigma^{-1} is the unitary group (n = t) or the partial
// isometries.
struct AllOnes {
  int n = 0;
};

// {|x1 x2| = 1} = H+ u H-.
struct DetMagOne {};

// {(x2 - x1^2)(x1 - x2^2) = 0}, two parabolas meeting at (0,0) and (1,1).
struct ParabolaPair {};

// {sum x_i^d = 1}, d even. Critical points are solved for n = 2.
struct FermatSphere {
  int n = 2;
  int d = 2;
};

// coordinate axes
struct AxisUnion {
  int n = 0;
};

// Zero set of an absolutely symmetric plane curve f.
struct PlaneCurve {
  BiPoly f;
};

using SliceFamily = std::variant<RankAtMost, AllOnes, DetMagOne, ParabolaPair, FermatSphere, AxisUnion, PlaneCurve>;

int dimension(const SliceFamily& family);
std::string family_name(const SliceFamily& family);
void validate(const SliceFamily& family);

// Defining polynomial of a plane family (DetMagOne as x1^2 x2^2 - 1).
BiPoly defining_polynomial(const SliceFamily& family);

// Distance-like violation of membership in S (0 on S).
double membership_residual(const SliceFamily& family, const RVec& x);

// Orthonormal basis (columns) of T_x S. For ParabolaPair, `branch` selects
// x2 = x1^2 (0) or x1 = x2^2 (1); -1 picks the closer branch.
RMat tangent_basis(const SliceFamily& family, const RVec& x, int branch = -1);

// max_j |(x - y)^T a_j| / (||x - y|| ||a_j||) over an orthonormal tangent basis.
double orthogonality_residual(const RMat& tangent, const RVec& x, const RVec& y);

// signed-permutation orbit, sorted
std::vector<RVec> symmetrize_orbit(const RVec& x);

struct EdCriticalSet {
  std::vector<RVec> points;
  std::vector<double> residuals;  // max(membership, orthogonality) per point
  std::vector<int> branches;      // ParabolaPair branch or DetMagOne sign; -1 otherwise
  std::vector<bool> at_singular;  // point of S_sing counted on a smooth branch
  bool genericity_ok = true;
};

struct GenericityReport {
  bool slice_ok = true;  // family-specific discriminant conditions
  bool lift_ok = true;   // |y_i| nonzero and pairwise distinct
  std::map<std::string, double> diagnostics;
  std::vector<std::string> reasons;

  bool generic() const { return slice_ok && lift_ok; }
};

// Certifies that y lies off the discriminant of the family (slice_ok) and has
// nonzero, pairwise distinct |y_i| (lift_ok, needed to lift to matrices).
GenericityReport genericity_check(const SliceFamily& family, const RVec& y,
                                  double eps = default_tolerances().genericity_eps);

// Real ED critical points of y on S^reg. Throws NonGenericData when the
// family-level genericity conditions fail.
EdCriticalSet ed_critical(const SliceFamily& family, const RVec& y, const Tolerances& tol = default_tolerances());

// Real solutions of {f = 0, g = 0} by resultant elimination in x2, back
// substitution, 2-D Newton polishing and clustering. Throws NonGenericData
// if the resultant vanishes identically.
std::vector<Eigen::Vector2d> solve_plane_system(const BiPoly& f, const BiPoly& g, double node_radius,
                                                const Tolerances& tol = default_tolerances());

// The critical curve (x1 - y1) df/dx2 - (x2 - y2) df/dx1.
BiPoly critical_curve(const BiPoly& f, const RVec& y);

}  // namespace hdcrit
