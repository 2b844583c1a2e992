#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdcrit/config.hpp"
#include "hdcrit/cxmat.hpp"
#include "hdcrit/lift.hpp"

namespace hdcrit {

// Real spanning set of T_X M at X = U diag(x) V^*.
struct TangentFrame {
  std::vector<CMat> generators;
  Eigen::Index rank = 0;
};

// {U Z diag(x) V^*} u {U diag(x) W^* V^*} u {U diag(a) V^*} for Z, W in the
// skew-Hermitian bases and a the columns of slice_basis.
TangentFrame tangent_frame(const CMat& U, const RVec& x, const CMat& V, const RMat& slice_basis,
                           double rank_tol = default_tolerances().tangent_rank);

// Frame from explicit real tangent vectors (columns in real_coordinates layout).
TangentFrame frame_from_real_basis(const RMat& basis, Eigen::Index rows, Eigen::Index cols,
                                   double rank_tol = default_tolerances().tangent_rank);

struct CriticalityResult {
  bool ok = false;
  double max_residual = 0.0;
};

// max_G |Re <Y - X, G>| / (||Y - X|| ||G|| + guard) over the generators.
CriticalityResult is_hd_critical(const CMat& Y, const CMat& X, const TangentFrame& frame, double tol);

struct SplittingReport {
  double cross_gram = 0.0;  // max |q(G, E_ii)| / ||G|| over orbit generators G
  Eigen::Index orbit_rank = 0;
  Eigen::Index expected_rank = 0;  // 2 n t - n
  bool ok = false;
};

// y has n nonzero entries with distinct squares, n <= t. Throws DegenerateY.
SplittingReport check_splitting(const RVec& y, int n, int t);

// Real solution space of {A D^* Hermitian, D^* A Hermitian} for D = diag(d), n x t.
std::vector<CMat> rd_solution_space(const RVec& d, int n, int t);

struct SuiteReport {
  std::string name;
  int trials = 0;
  int failures = 0;
  double worst = 0.0;
  std::vector<std::string> notes;

  bool pass() const { return trials > 0 && failures == 0; }
};

SuiteReport lemma_rd_suite(std::uint64_t seed, int trials = 100);
// Includes the diag(i,2,3) / diag(i,1,1) trace value -4i.
SuiteReport lemma_complex_suite(std::uint64_t seed, int trials = 100);
// Hermitian/skew split and the skew basis of cxmat.
SuiteReport skew_hermitian_suite(std::uint64_t seed, int trials = 100);
SuiteReport splitting_suite(std::uint64_t seed, int trials = 100);

// Tr((A - U)(U diag(i, -2i, 3i))^*) with A = diag(i,2,3), U = diag(i,1,1).
cplx unitary_tangent_trace();

enum class BruteVariety { Rank1, DetMag };

// Multistart Newton on the real Lagrange system of ||X - Y||^2 over a 2 x 2
// variety (Re det = Im det = 0, or |det|^2 = 1). Solutions are clustered and
// certified against the nullspace of the constraint Jacobian. Throws
// SolverFailure if fewer than expected_count solutions are found.
std::vector<HdCriticalPoint> brute_force_hd(const CMat& Y, BruteVariety variety, int starts, std::uint64_t seed,
                                            std::optional<int> expected_count = std::nullopt,
                                            const Tolerances& tol = default_tolerances());

// Random generic 2 x 2 data: brute_force_hd against lift_critical for the rank <= 1
// and |det| = 1 varieties (Hausdorff distance and sim check at 1e-6).
SuiteReport oracle_suite(std::uint64_t seed, int trials = 20, int starts = default_tolerances().newton_starts);

double hausdorff_distance(const std::vector<CMat>& a, const std::vector<CMat>& b);

}  // namespace hdcrit
