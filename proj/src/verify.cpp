#include "hdcrit/verify.hpp"

#include "hdcrit/chambers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hdcrit {

TangentFrame frame_from_real_basis(const RMat& basis, Eigen::Index rows, Eigen::Index cols, double rank_tol) {
  TangentFrame f;
  for (Eigen::Index j = 0; j < basis.cols(); ++j) f.generators.push_back(from_real_coordinates(basis.col(j), rows, cols));
  f.rank = numerical_rank(basis, rank_tol);
  return f;
}

TangentFrame tangent_frame(const CMat& U, const RVec& x, const CMat& V, const RMat& slice_basis, double rank_tol) {
  const Eigen::Index n = U.rows(), t = V.rows();
  if (U.cols() != n || V.cols() != t) throw Error(ErrorCode::NotSquare, "frame factors must be square");
  if (x.size() > std::min(n, t)) throw Error(ErrorCode::ShapeMismatch, "slice point longer than min(n, t)");
  if (slice_basis.cols() > 0 && slice_basis.rows() != x.size())
    throw Error(ErrorCode::ShapeMismatch, "slice basis rows must match the slice dimension");
  const CMat D = diag_matrix(x, n, t);
  const CMat Vh = V.adjoint();
  TangentFrame f;
  for (const CMat& Z : skew_basis(n)) f.generators.push_back(U * Z * D * Vh);
  for (const CMat& W : skew_basis(t)) f.generators.push_back(U * D * W.adjoint() * Vh);
  for (Eigen::Index j = 0; j < slice_basis.cols(); ++j)
    f.generators.push_back(U * diag_matrix(slice_basis.col(j), n, t) * Vh);
  f.rank = numerical_rank(stack_real_coordinates(f.generators), rank_tol);
  return f;
}

CriticalityResult is_hd_critical(const CMat& Y, const CMat& X, const TangentFrame& frame, double tol) {
  if (Y.rows() != X.rows() || Y.cols() != X.cols()) throw Error(ErrorCode::ShapeMismatch, "Y and X differ in shape");
  const CMat R = Y - X;
  const double rn = R.norm();
  const double guard = default_tolerances().residual_guard;
  CriticalityResult out;
  // X = Y up to reconstruction error: trivially critical, and the ratio below
  // would only measure rounding noise.
  if (rn <= default_tolerances().svd_reconstruction * std::max(1.0, Y.norm())) {
    out.ok = true;
    return out;
  }
  for (const CMat& G : frame.generators) {
    const double gn = G.norm();
    if (gn == 0.0) continue;
    out.max_residual = std::max(out.max_residual, std::abs(real_inner(R, G)) / (rn * gn + guard));
  }
  out.ok = out.max_residual <= tol;
  return out;
}

namespace {

bool distinct_nonzero_squares(const RVec& y, double rel) {
  const double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (std::abs(y(i)) <= rel * scale) return false;
    for (Eigen::Index j = 0; j < i; ++j)
      if (std::abs(y(i) * y(i) - y(j) * y(j)) <= rel * scale * scale) return false;
  }
  return true;
}

RVec random_distinct(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.5, 3.0);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    RVec y(n);
    for (int i = 0; i < n; ++i) y(i) = (coin(rng) ? -1.0 : 1.0) * u(rng);
    if (distinct_nonzero_squares(y, 1e-3)) return y;
  }
}

}  // namespace

SplittingReport check_splitting(const RVec& y, int n, int t) {
  if (n < 1 || t < n || y.size() != n) throw Error(ErrorCode::InvalidArgument, "check_splitting needs y in R^n, n <= t");
  if (!distinct_nonzero_squares(y, 1e-12)) throw Error(ErrorCode::DegenerateY, "entries must be nonzero with distinct squares");
  const CMat D = diag_matrix(y, n, t);
  std::vector<CMat> gens;
  for (const CMat& Z : skew_basis(n)) gens.push_back(Z * D);
  for (const CMat& W : skew_basis(t)) gens.push_back(D * W.adjoint());

  SplittingReport rep;
  for (const CMat& G : gens) {
    const double gn = G.norm();
    if (gn == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      CMat E = CMat::Zero(n, t);
      E(i, i) = 1.0;
      rep.cross_gram = std::max(rep.cross_gram, std::abs(real_inner(G, E)) / gn);
    }
  }
  rep.orbit_rank = numerical_rank(stack_real_coordinates(gens), 1e-9);
  rep.expected_rank = 2 * Eigen::Index(n) * t - n;
  rep.ok = rep.cross_gram <= 1e-10 && rep.orbit_rank == rep.expected_rank && rep.orbit_rank + n == 2 * Eigen::Index(n) * t;
  return rep;
}

std::vector<CMat> rd_solution_space(const RVec& d, int n, int t) {
  if (d.size() > std::min(n, t)) throw Error(ErrorCode::ShapeMismatch, "diagonal longer than min(n, t)");
  const CMat D = diag_matrix(d, n, t);
  const Eigen::Index unknowns = 2 * Eigen::Index(n) * t;
  // Columns: the linear conditions applied to each real coordinate direction.
  const Eigen::Index eqs = 2 * (Eigen::Index(n) * n + Eigen::Index(t) * t);
  RMat L(eqs, unknowns);
  for (Eigen::Index k = 0; k < unknowns; ++k) {
    RVec e = RVec::Zero(unknowns);
    e(k) = 1.0;
    const CMat A = from_real_coordinates(e, n, t);
    const CMat P = A * D.adjoint();
    const CMat Q = D.adjoint() * A;
    L.col(k) << real_coordinates(P - P.adjoint()), real_coordinates(Q - Q.adjoint());
  }
  const RMat N = nullspace(L, 1e-10);
  std::vector<CMat> out;
  for (Eigen::Index j = 0; j < N.cols(); ++j) out.push_back(from_real_coordinates(N.col(j), n, t));
  return out;
}

SuiteReport lemma_rd_suite(std::uint64_t seed, int trials) {
  Rng rng(seed);
  std::uniform_int_distribution<int> dim(2, 5);
  SuiteReport rep{"lemma_rd", 0, 0, 0.0, {}};
  for (int trial = 0; trial < trials; ++trial) {
    int n = dim(rng), t = dim(rng);
    if (n > t) std::swap(n, t);
    const RVec d = random_distinct(n, rng);
    const auto basis = rd_solution_space(d, n, t);
    double off = 0.0;
    for (const CMat& A : basis) {
      for (Eigen::Index j = 0; j < t; ++j)
        for (Eigen::Index i = 0; i < n; ++i) off = std::max(off, i == j ? std::abs(A(i, j).imag()) : std::abs(A(i, j)));
    }
    rep.worst = std::max(rep.worst, off);
    ++rep.trials;
    if (static_cast<int>(basis.size()) != n || off > 1e-9) {
      ++rep.failures;
      rep.notes.push_back("trial " + std::to_string(trial) + ": dim " + std::to_string(basis.size()));
    }
  }
  // Repeated entries break the hypothesis and enlarge the solution space.
  RVec rep_d(2);
  rep_d << 1.0, 1.0;
  const auto degenerate = rd_solution_space(rep_d, 2, 2);
  rep.notes.push_back("expected-degenerate diag(1,1): dim " + std::to_string(degenerate.size()));
  return rep;
}

cplx unitary_tangent_trace() {
  const cplx I(0.0, 1.0);
  CMat A = CMat::Zero(3, 3), U = CMat::Zero(3, 3), W = CMat::Zero(3, 3);
  A.diagonal() << I, 2.0, 3.0;
  U.diagonal() << I, 1.0, 1.0;
  W.diagonal() << I, -2.0 * I, 3.0 * I;
  return hermitian_inner(A - U, U * W);
}

SuiteReport lemma_complex_suite(std::uint64_t seed, int trials) {
  Rng rng(seed);
  std::uniform_int_distribution<int> dim(2, 6);
  SuiteReport rep{"lemma_complex", 0, 0, 0.0, {}};
  const cplx I(0.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    const int m = dim(rng);
    const int k = std::uniform_int_distribution<int>(1, m - 1)(rng);
    const CMat W = random_ginibre(m, k, rng);
    // Re <v, w> = 0 for w in {w_j, i w_j}: 2k real conditions on v in R^{2m}.
    RMat C(2 * k, 2 * m);
    for (int j = 0; j < k; ++j) {
      C.row(2 * j) = real_coordinates(W.col(j)).transpose();
      C.row(2 * j + 1) = real_coordinates(CMat(I * W.col(j))).transpose();
    }
    const RMat N = nullspace(C, 1e-12);
    RVec coef(N.cols());
    std::normal_distribution<double> normal;
    for (Eigen::Index i = 0; i < coef.size(); ++i) coef(i) = normal(rng);
    const CMat v = from_real_coordinates(N * coef, m, 1);
    double worst = 0.0;
    for (int j = 0; j < k; ++j)
      worst = std::max(worst, std::abs(hermitian_inner(v, W.col(j))) / (v.norm() * W.col(j).norm()));
    rep.worst = std::max(rep.worst, worst);
    ++rep.trials;
    if (worst > 1e-10) ++rep.failures;
  }
  const cplx tr = unitary_tangent_trace();
  ++rep.trials;
  if (std::abs(tr - cplx(0.0, -4.0)) > 1e-12) {
    ++rep.failures;
    rep.notes.push_back("unitary tangent trace mismatch");
  }
  rep.notes.push_back("unitary tangent trace = " + std::to_string(tr.real()) + " + " + std::to_string(tr.imag()) + "i");
  return rep;
}

SuiteReport skew_hermitian_suite(std::uint64_t seed, int trials) {
  Rng rng(seed);
  std::uniform_int_distribution<int> dim(1, 6);
  SuiteReport rep{"skew_hermitian", 0, 0, 0.0, {}};
  for (int trial = 0; trial < trials; ++trial) {
    const int n = dim(rng);
    const CMat A = random_ginibre(n, n, rng);
    const HermSkew hk = herm_skew_split(A);
    double worst = (hk.hermitian - hk.hermitian.adjoint()).norm();
    worst = std::max(worst, (hk.skew + hk.skew.adjoint()).norm());
    worst = std::max(worst, (hk.hermitian + hk.skew - A).norm());
    worst = std::max(worst, std::abs(real_inner(hk.hermitian, hk.skew)));
    const auto basis = skew_basis(n);
    for (const CMat& Z : basis) worst = std::max(worst, (Z + Z.adjoint()).norm());
    const bool full = numerical_rank(stack_real_coordinates(basis), 1e-12) == Eigen::Index(n) * n &&
                      basis.size() == static_cast<std::size_t>(n * n);
    worst /= norm_floor(A);
    rep.worst = std::max(rep.worst, worst);
    ++rep.trials;
    if (worst > 1e-12 || !full) ++rep.failures;
  }
  return rep;
}

SuiteReport splitting_suite(std::uint64_t seed, int trials) {
  Rng rng(seed);
  std::uniform_int_distribution<int> dim(2, 5);
  SuiteReport rep{"splitting", 0, 0, 0.0, {}};
  for (int trial = 0; trial < trials; ++trial) {
    int n = dim(rng), t = dim(rng);
    if (n > t) std::swap(n, t);
    const SplittingReport s = check_splitting(random_distinct(n, rng), n, t);
    rep.worst = std::max(rep.worst, s.cross_gram);
    ++rep.trials;
    if (!s.ok) ++rep.failures;
  }
  return rep;
}

namespace {

// Values, gradients and Hessians of Re det and Im det on 2 x 2 matrices in
// real_coordinates layout (entry e has coordinates 2e, 2e + 1).
struct DetParts {
  double re = 0, im = 0;
  RVec g_re = RVec::Zero(8), g_im = RVec::Zero(8);
  RMat h_re = RMat::Zero(8, 8), h_im = RMat::Zero(8, 8);
};

DetParts det_parts(const RVec& z) {
  auto entry = [&](int e) { return cplx(z(2 * e), z(2 * e + 1)); };
  // det = e0 e3 - e2 e1 with column-major entries e0=(0,0) e1=(1,0) e2=(0,1) e3=(1,1).
  const cplx det = entry(0) * entry(3) - entry(2) * entry(1);
  DetParts p;
  p.re = det.real();
  p.im = det.imag();
  const int partner[4] = {3, 2, 1, 0};
  const double sign[4] = {1, -1, -1, 1};
  for (int e = 0; e < 4; ++e) {
    const cplx dh = sign[e] * entry(partner[e]);
    // d/da = h', d/db = i h'.
    p.g_re(2 * e) = dh.real();
    p.g_re(2 * e + 1) = -dh.imag();
    p.g_im(2 * e) = dh.imag();
    p.g_im(2 * e + 1) = dh.real();
    const int q = partner[e];
    const double c = sign[e];
    p.h_re(2 * e, 2 * q) = c;
    p.h_re(2 * e + 1, 2 * q + 1) = -c;
    p.h_im(2 * e, 2 * q + 1) = c;
    p.h_im(2 * e + 1, 2 * q) = c;
  }
  return p;
}

struct Constraints {
  RVec g;
  RMat J;                  // m x 8
  std::vector<RMat> hess;  // m Hessians
};

Constraints constraints(BruteVariety v, const RVec& z) {
  const DetParts p = det_parts(z);
  Constraints c;
  if (v == BruteVariety::Rank1) {
    c.g.resize(2);
    c.g << p.re, p.im;
    c.J.resize(2, 8);
    c.J.row(0) = p.g_re.transpose();
    c.J.row(1) = p.g_im.transpose();
    c.hess = {p.h_re, p.h_im};
  } else {
    c.g.resize(1);
    c.g << p.re * p.re + p.im * p.im - 1.0;
    c.J.resize(1, 8);
    c.J.row(0) = (2.0 * (p.re * p.g_re + p.im * p.g_im)).transpose();
    c.hess = {2.0 * (p.g_re * p.g_re.transpose() + p.re * p.h_re + p.g_im * p.g_im.transpose() + p.im * p.h_im)};
  }
  return c;
}

RVec lagrange_residual(BruteVariety v, const RVec& w, const RVec& zy) {
  const RVec z = w.head(8);
  const Constraints c = constraints(v, z);
  const Eigen::Index m = c.g.size();
  RVec F(8 + m);
  F.head(8) = 2.0 * (z - zy) + c.J.transpose() * w.tail(m);
  F.tail(m) = c.g;
  return F;
}

// Random point of the variety: Haar frames and log-uniform singular values
// (sigma_2 = 0 for rank one, sigma_1 sigma_2 = 1 with a random phase for |det| = 1).
CMat random_start(BruteVariety v, double scale, Rng& rng) {
  std::uniform_real_distribution<double> decades(-1.5, 1.5);
  CMat D = CMat::Zero(2, 2);
  if (v == BruteVariety::Rank1) {
    D(0, 0) = scale * std::pow(10.0, decades(rng) / 1.5);
  } else {
    const double a = std::pow(10.0, decades(rng));
    const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    D(0, 0) = a;
    D(1, 1) = std::polar(1.0 / a, theta);
  }
  return random_unitary(2, rng) * D * random_unitary(2, rng);
}

struct NewtonOutcome {
  RVec z;
  double residual;
  bool converged;
};

NewtonOutcome newton(BruteVariety v, RVec z, const RVec& zy, int max_iter, const RVec* lambda0) {
  Constraints c = constraints(v, z);
  const Eigen::Index m = c.g.size();
  RVec w(8 + m);
  w.head(8) = z;
  // Least-squares multipliers unless given.
  w.tail(m) = lambda0 ? lambda0->head(m).eval() : c.J.transpose().colPivHouseholderQr().solve(-2.0 * (z - zy)).eval();
  const double scale = std::max(1.0, zy.norm());
  RVec F = lagrange_residual(v, w, zy);
  double merit = F.norm();
  for (int it = 0; it < max_iter && F.norm() > 1e-13 * scale; ++it) {
    c = constraints(v, w.head(8));
    RMat K = RMat::Zero(8 + m, 8 + m);
    K.topLeftCorner(8, 8) = 2.0 * RMat::Identity(8, 8);
    for (Eigen::Index i = 0; i < m; ++i) K.topLeftCorner(8, 8) += w(8 + i) * c.hess[static_cast<std::size_t>(i)];
    K.topRightCorner(8, m) = c.J.transpose();
    K.bottomLeftCorner(m, 8) = c.J;
    const RVec step = K.colPivHouseholderQr().solve(-F);
    if (!step.allFinite()) break;
    double lambda = 1.0;
    bool improved = false;
    for (int half = 0; half < 30; ++half) {
      const RVec trial = w + lambda * step;
      const RVec Ft = lagrange_residual(v, trial, zy);
      const double mt = Ft.norm();
      if (Ft.allFinite() && mt < merit) {
        w = trial;
        F = Ft;
        merit = mt;
        improved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!improved) break;
  }
  const double fn = F.norm();
  return {w.head(8), fn / scale, fn <= 1e-9 * scale};
}

}  // namespace

std::vector<HdCriticalPoint> brute_force_hd(const CMat& Y, BruteVariety variety, int starts, std::uint64_t seed,
                                            std::optional<int> expected_count, const Tolerances& tol) {
  if (Y.rows() != 2 || Y.cols() != 2) throw Error(ErrorCode::ShapeMismatch, "brute_force_hd is for 2 x 2 data");
  require_finite(Y);
  const RVec zy = real_coordinates(Y);
  const double scale = std::max(1.0, Y.norm());

  struct Found {
    CMat X;
    double newton_residual;
    double crit_residual;
  };
  std::vector<Found> found;
  for (int s = 0; s < starts; ++s) {
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + std::uint64_t(s));
    const CMat X0 = random_start(variety, scale, rng);
    // A third of the starts take least-squares multipliers; the rest draw them
    // over a few decades, since least-squares multipliers pull every start
    // towards the global minimum.
    std::normal_distribution<double> normal;
    const double mag = std::pow(10.0, std::uniform_real_distribution<double>(-1.5, 2.0)(rng));
    RVec lam(2);
    lam << normal(rng) * mag, normal(rng) * mag;
    const NewtonOutcome out =
        newton(variety, real_coordinates(X0), zy, tol.newton_max_iterations, s % 3 == 0 ? nullptr : &lam);
    if (!out.converged) continue;
    const Constraints c = constraints(variety, out.z);
    // Points where the constraint Jacobian drops rank are singular; discard.
    if (numerical_rank(c.J, 1e-8) < c.J.rows() || c.J.norm() <= 1e-8 * scale) continue;
    const RMat tangent = nullspace(c.J, 1e-10);
    const CMat X = from_real_coordinates(out.z, 2, 2);
    const CriticalityResult cr = is_hd_critical(Y, X, frame_from_real_basis(tangent, 2, 2), 1e-6);
    if (!cr.ok) continue;
    found.push_back({X, out.residual, cr.max_residual});
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Found& a, const Found& b) { return a.newton_residual < b.newton_residual; });
  std::vector<Found> reps;
  for (const Found& f : found) {
    bool dup = false;
    for (const Found& r : reps)
      if ((r.X - f.X).norm() <= tol.cluster_radius) dup = true;
    if (!dup) reps.push_back(f);
  }

  std::vector<HdCriticalPoint> out;
  for (const Found& r : reps) {
    HdCriticalPoint p;
    p.X = r.X;
    p.distance_sq = (Y - r.X).squaredNorm();
    p.residual = r.crit_residual;
    p.source_x = jacobi_svd(r.X).sigma;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const HdCriticalPoint& a, const HdCriticalPoint& b) {
    if (a.distance_sq != b.distance_sq) return a.distance_sq < b.distance_sq;
    const RVec za = real_coordinates(a.X), zb = real_coordinates(b.X);
    return std::lexicographical_compare(za.data(), za.data() + za.size(), zb.data(), zb.data() + zb.size());
  });
  if (expected_count && static_cast<int>(out.size()) < *expected_count)
    throw Error(ErrorCode::SolverFailure, "brute force found " + std::to_string(out.size()) + " of " +
                                              std::to_string(*expected_count) + " critical points");
  return out;
}

SuiteReport oracle_suite(std::uint64_t seed, int trials, int starts) {
  Rng rng(seed);
  SuiteReport rep{"oracle", 0, 0, 0.0, {}};
  int done = 0;
  for (int attempt = 0; done < trials && attempt < 10 * trials; ++attempt) {
    const CMat Y = random_ginibre(2, 2, rng) * 2.0;
    // Keep away from the discriminants: near a fold two critical points merge
    // and Newton basins shrink to nothing.
    const RVec sg = svd(Y).sigma;
    const auto [dp, dm] = detmag_discriminants(sg);
    const double a = sg(0) * sg(1);
    const double dscale = 256 + 192 * a + 6 * a * a + 4 * a * a * a + 27 * std::pow(sg(0), 4) + 27 * std::pow(sg(1), 4);
    if (std::min(std::abs(dp), std::abs(dm)) < 0.05 * dscale || sg(0) - sg(1) < 0.05 * sg(0) || sg(1) < 0.05 * sg(0))
      continue;
    std::vector<HdCriticalPoint> lifted[2];
    try {
      lifted[0] = lift_critical(Y, RankAtMost{2, 1});
      lifted[1] = lift_critical(Y, DetMagOne{});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonGenericData || e.code() == ErrorCode::DegenerateSpectrum) continue;
      throw;
    }
    ++done;
    const BruteVariety kinds[2] = {BruteVariety::Rank1, BruteVariety::DetMag};
    for (int v = 0; v < 2; ++v) {
      ++rep.trials;
      const std::string tag = std::string(v == 0 ? "rank1" : "detmag") + " trial " + std::to_string(done);
      std::vector<HdCriticalPoint> brute;
      try {
        brute = brute_force_hd(Y, kinds[v], starts, seed + std::uint64_t(attempt),
                               static_cast<int>(lifted[v].size()));
      } catch (const Error& e) {
        ++rep.failures;
        rep.notes.push_back(tag + ": " + e.what());
        continue;
      }
      std::vector<CMat> a, b;
      for (const auto& p : lifted[v]) a.push_back(p.X);
      for (const auto& p : brute) b.push_back(p.X);
      const double h = hausdorff_distance(a, b);
      rep.worst = std::max(rep.worst, h);
      bool sim_ok = true;
      for (const auto& p : brute) sim_ok = sim_ok && sim_decomposition_check(Y, p.X, 1e-6).ok;
      if (h > 1e-6 || !sim_ok) {
        ++rep.failures;
        rep.notes.push_back(tag + ": hausdorff " + std::to_string(h) + (sim_ok ? "" : ", sim check failed"));
      }
    }
  }
  return rep;
}

double hausdorff_distance(const std::vector<CMat>& a, const std::vector<CMat>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<CMat>& p, const std::vector<CMat>& q) {
    double worst = 0.0;
    for (const CMat& x : p) {
      double best = std::numeric_limits<double>::infinity();
      for (const CMat& y : q) best = std::min(best, (x - y).norm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace hdcrit
