#pragma once

namespace hdcrit {

// Numerical thresholds shared across modules. Matrix tolerances are relative
// to max(1, ||A||_F) unless noted otherwise.
struct Tolerances {
  double svd_orthonormality = 1e-12;    // per dimension
  double svd_reconstruction = 1e-12;
  int svd_max_sweeps = 100;

  double poly_degeneracy = 1e-12;       // leading coefficient vs max-norm
  double root_refinement = 1e-12;

  double cluster_radius = 1e-6;         // infinity norm
  double singular_gradient = 1e-8;      // ||grad f|| relative to scale
  double backsub_residual = 1e-7;
  double genericity_eps = 1e-6;

  double membership = 1e-9;
  double orthogonality = 1e-8;
  double criticality = 1e-8;           // HD-criticality residual of lifted points

  double chamber_skip = 1e-3;           // distance from an invariant zero
  double eckart_young_rank = 1e-10;     // sigma_j > tol * sigma_1
  double close_spectrum_warning = 1e-6;
  double tangent_rank = 1e-9;

  int newton_starts = 200;
  int newton_max_iterations = 100;
  double residual_guard = 1e-300;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace hdcrit
