#include "hdcrit/slices.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "hdcrit/chambers.hpp"

namespace hdcrit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double inf_norm(const RVec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

RMat gradient_complement(const RVec& grad) {
  const Eigen::Index n = grad.size();
  if (grad.norm() == 0.0) return RMat::Identity(n, n);
  RMat row = grad.transpose();
  return nullspace(row, 1e-14);
}

RMat coordinate_columns(const std::vector<Eigen::Index>& idx, Eigen::Index n) {
  RMat T = RMat::Zero(n, static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) T(idx[k], static_cast<Eigen::Index>(k)) = 1.0;
  return T;
}

std::vector<Eigen::Index> support(const RVec& x) {
  const double cut = 1e-12 * std::max(1.0, inf_norm(x));
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (std::abs(x(i)) > cut) idx.push_back(i);
  return idx;
}

BiPoly fermat_poly(int d) { return pow(BiPoly::x1(), d) + pow(BiPoly::x2(), d) - BiPoly::constant(1.0); }

// x1^{d-1} (x2 - y2) - x2^{d-1} (x1 - y1)
BiPoly fermat_gamma(int d, const RVec& y) {
  const BiPoly x1 = BiPoly::x1(), x2 = BiPoly::x2();
  return pow(x1, d - 1) * (x2 - BiPoly::constant(y(1))) - pow(x2, d - 1) * (x1 - BiPoly::constant(y(0)));
}

BiPoly detmag_poly() { return pow(BiPoly::x1() * BiPoly::x2(), 2) - BiPoly::constant(1.0); }

BiPoly parabola_poly() {
  const BiPoly x1 = BiPoly::x1(), x2 = BiPoly::x2();
  return (x2 - x1 * x1) * (x1 - x2 * x2);
}

// Family-specific solve result before residual certification.
struct RawSolve {
  EdCriticalSet set;
  bool multiple_root = false;
  double min_transversality = 1.0;
  double min_cross_separation = std::numeric_limits<double>::infinity();
};

void push_point(RawSolve& raw, RVec x, int branch, bool singular) {
  raw.set.points.push_back(std::move(x));
  raw.set.branches.push_back(branch);
  raw.set.at_singular.push_back(singular);
}

RawSolve solve_detmag(const RVec& y) {
  RawSolve raw;
  for (int s : {+1, -1}) {
    const RPoly q{-1.0, s * y(1), 0.0, -y(0), 1.0};
    for (const auto& r : real_roots_detailed(q)) {
      if (r.multiple) raw.multiple_root = true;
      RVec x(2);
      x << r.value, s / r.value;
      push_point(raw, std::move(x), s > 0 ? 0 : 1, false);
    }
  }
  return raw;
}

RawSolve solve_parabola(const RVec& y, double radius) {
  RawSolve raw;
  // Branch 0: (t, t^2), normal equation 2t^3 + (1 - 2 y2) t - y1 = 0.
  // Branch 1: (s^2, s), the mirror image.
  for (int branch : {0, 1}) {
    const double a = branch == 0 ? y(0) : y(1);
    const double b = branch == 0 ? y(1) : y(0);
    const RPoly cubic{-a, 1.0 - 2.0 * b, 0.0, 2.0};
    for (const auto& r : real_roots_detailed(cubic)) {
      if (r.multiple) raw.multiple_root = true;
      RVec x(2);
      if (branch == 0)
        x << r.value, r.value * r.value;
      else
        x << r.value * r.value, r.value;
      const bool singular = std::max(std::abs(x(0)), std::abs(x(1))) <= radius ||
                            std::max(std::abs(x(0) - 1.0), std::abs(x(1) - 1.0)) <= radius;
      push_point(raw, std::move(x), branch, singular);
    }
  }
  // A crossing point that is critical for both branches is a collision.
  EdCriticalSet merged;
  const auto& pts = raw.set.points;
  std::vector<bool> dropped(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (raw.set.branches[i] == raw.set.branches[j]) continue;
      const double dist = inf_norm(pts[i] - pts[j]);
      raw.min_cross_separation = std::min(raw.min_cross_separation, dist);
      if (dist <= radius) dropped[j] = true;
    }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dropped[i]) continue;
    merged.points.push_back(pts[i]);
    merged.branches.push_back(raw.set.branches[i]);
    merged.at_singular.push_back(raw.set.at_singular[i]);
  }
  raw.set = std::move(merged);
  return raw;
}

void record_transversality(RawSolve& raw, const BiPoly& f, const BiPoly& g) {
  for (const auto& x : raw.set.points) {
    const Eigen::Vector2d gf = f.gradient(x(0), x(1));
    const Eigen::Vector2d gg = g.gradient(x(0), x(1));
    const double denom = gf.norm() * gg.norm();
    const double sine = denom > 0.0 ? std::abs(gf(0) * gg(1) - gf(1) * gg(0)) / denom : 0.0;
    raw.min_transversality = std::min(raw.min_transversality, sine);
  }
}

RawSolve solve_curve(const BiPoly& f, const BiPoly& g, double radius, const Tolerances& tol, bool drop_singular) {
  RawSolve raw;
  const BiPoly fx = f.d_x1(), fy = f.d_x2();
  for (const auto& p : solve_plane_system(f, g, radius, tol)) {
    const double gnorm = Eigen::Vector2d(fx(p(0), p(1)), fy(p(0), p(1))).norm();
    const double scale = std::max(1.0, fx.magnitude_at(p(0), p(1)) + fy.magnitude_at(p(0), p(1)));
    const bool singular = gnorm <= tol.singular_gradient * scale;
    if (singular && drop_singular) continue;
    push_point(raw, RVec(p), -1, singular);
  }
  record_transversality(raw, f, g);
  return raw;
}

RawSolve solve_family(const SliceFamily& family, const RVec& y, const Tolerances& tol) {
  return std::visit(
      overloaded{
          [&](const RankAtMost& s) {
            RawSolve raw;
            std::vector<int> mask(static_cast<std::size_t>(s.n), 0);
            std::fill(mask.begin(), mask.begin() + s.r, 1);
            // Lexicographic r-subsets: prev_permutation on a leading-ones mask.
            do {
              RVec x = RVec::Zero(s.n);
              for (int i = 0; i < s.n; ++i)
                if (mask[static_cast<std::size_t>(i)]) x(i) = y(i);
              push_point(raw, std::move(x), -1, false);
            } while (std::prev_permutation(mask.begin(), mask.end()));
            return raw;
          },
          [&](const AllOnes& s) {
            RawSolve raw;
            for (long long bits = 0; bits < (1LL << s.n); ++bits) {
              RVec x(s.n);
              for (int i = 0; i < s.n; ++i) x(i) = (bits >> (s.n - 1 - i)) & 1 ? -1.0 : 1.0;
              push_point(raw, std::move(x), -1, false);
            }
            return raw;
          },
          [&](const DetMagOne&) { return solve_detmag(y); },
          [&](const ParabolaPair&) { return solve_parabola(y, tol.cluster_radius); },
          [&](const FermatSphere& s) {
            if (s.n == 1) {
              RawSolve raw;
              push_point(raw, RVec::Constant(1, 1.0), -1, false);
              push_point(raw, RVec::Constant(1, -1.0), -1, false);
              return raw;
            }
            if (s.n != 2) throw Error(ErrorCode::InvalidArgument, "Fermat critical points are solved for n <= 2 only");
            return solve_curve(fermat_poly(s.d), fermat_gamma(s.d, y), 1.0, tol, true);
          },
          [&](const AxisUnion& s) {
            RawSolve raw;
            for (int i = 0; i < s.n; ++i) {
              RVec x = RVec::Zero(s.n);
              x(i) = y(i);
              push_point(raw, std::move(x), -1, false);
            }
            return raw;
          },
          [&](const PlaneCurve& s) { return solve_curve(s.f, critical_curve(s.f, y), 1.0 + inf_norm(y), tol, true); },
      },
      family);
}

struct Analysis {
  GenericityReport report;
  std::optional<RawSolve> raw;
};

Analysis analyze(const SliceFamily& family, const RVec& y, double eps, const Tolerances& tol) {
  validate(family);
  if (y.size() != dimension(family)) throw Error(ErrorCode::ShapeMismatch, "data vector has the wrong length");
  if (!y.allFinite()) throw Error(ErrorCode::InvalidArgument, "data vector must be finite");
  Analysis out;
  GenericityReport& rep = out.report;
  const double scale = std::max(1.0, inf_norm(y));

  // Lifting condition: |y_i| nonzero and pairwise distinct.
  std::vector<double> mags(static_cast<std::size_t>(y.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) mags[static_cast<std::size_t>(i)] = std::abs(y(i));
  std::sort(mags.begin(), mags.end());
  const double min_abs = mags.front();
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < mags.size(); ++i) min_gap = std::min(min_gap, mags[i] - mags[i - 1]);
  rep.diagnostics["min_abs_y"] = min_abs;
  if (mags.size() > 1) rep.diagnostics["min_gap_abs_y"] = min_gap;
  if (min_abs <= eps * scale) {
    rep.lift_ok = false;
    rep.reasons.push_back("some |y_i| is zero");
  }
  if (mags.size() > 1 && min_gap <= eps * scale) {
    rep.lift_ok = false;
    rep.reasons.push_back("|y_i| are not pairwise distinct");
  }

  auto fail_slice = [&](const std::string& why) {
    rep.slice_ok = false;
    rep.reasons.push_back(why);
  };

  std::visit(overloaded{
                 [&](const RankAtMost&) {
                   if (min_abs <= eps * scale) fail_slice("projection lands on a lower-rank stratum");
                 },
                 [&](const AxisUnion&) {
                   if (min_abs <= eps * scale) fail_slice("projection lands on the origin");
                 },
                 [&](const AllOnes&) {},
                 [&](const DetMagOne&) {
                   const auto [dp, dm] = detmag_discriminants(y);
                   rep.diagnostics["Dplus"] = dp;
                   rep.diagnostics["Dminus"] = dm;
                   const double a = std::abs(y(0) * y(1));
                   const double dscale = 256 + 192 * a + 6 * a * a + 4 * a * a * a + 27 * std::pow(y(0), 4) +
                                         27 * std::pow(y(1), 4);
                   if (std::abs(dp) <= eps * dscale || std::abs(dm) <= eps * dscale)
                     fail_slice("y lies on the discriminant curve D+ D- = 0");
                 },
                 [&](const ParabolaPair&) {
                   const auto [m1, m2] = parabola_evolute_margin(y);
                   rep.diagnostics["m1"] = m1;
                   rep.diagnostics["m2"] = m2;
                   const double s1 = 1.0 + 16 * std::pow(std::abs(y(1) - 0.5), 3) + 27 * y(0) * y(0);
                   const double s2 = 1.0 + 16 * std::pow(std::abs(y(0) - 0.5), 3) + 27 * y(1) * y(1);
                   if (std::abs(m1) <= eps * s1 || std::abs(m2) <= eps * s2) fail_slice("y lies on an evolute");
                 },
                 [&](const FermatSphere&) {},
                 [&](const PlaneCurve&) {},
             },
             family);
  if (!rep.slice_ok) return out;

  try {
    out.raw = solve_family(family, y, tol);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonGenericData) throw;
    fail_slice(e.what());
    return out;
  }
  const RawSolve& raw = *out.raw;
  if (raw.multiple_root) fail_slice("critical equation has a multiple root");
  const bool planar = std::holds_alternative<FermatSphere>(family) || std::holds_alternative<PlaneCurve>(family);
  if (planar && dimension(family) == 2) {
    rep.diagnostics["min_transversality"] = raw.min_transversality;
    if (raw.min_transversality <= eps) fail_slice("critical curve is tangent to S");
  }
  if (std::holds_alternative<ParabolaPair>(family)) {
    rep.diagnostics["min_cross_separation"] = raw.min_cross_separation;
    if (raw.min_cross_separation <= tol.cluster_radius) fail_slice("both parabolas share a critical point");
  }
  return out;
}

}  // namespace

int dimension(const SliceFamily& family) {
  return std::visit(overloaded{
                        [](const RankAtMost& s) { return s.n; },
                        [](const AllOnes& s) { return s.n; },
                        [](const DetMagOne&) { return 2; },
                        [](const ParabolaPair&) { return 2; },
                        [](const FermatSphere& s) { return s.n; },
                        [](const AxisUnion& s) { return s.n; },
                        [](const PlaneCurve&) { return 2; },
                    },
                    family);
}

std::string family_name(const SliceFamily& family) {
  return std::visit(overloaded{
                        [](const RankAtMost&) { return std::string("rank"); },
                        [](const AllOnes&) { return std::string("allones"); },
                        [](const DetMagOne&) { return std::string("detmag"); },
                        [](const ParabolaPair&) { return std::string("parabola"); },
                        [](const FermatSphere&) { return std::string("fermat"); },
                        [](const AxisUnion&) { return std::string("axes"); },
                        [](const PlaneCurve&) { return std::string("curve"); },
                    },
                    family);
}

void validate(const SliceFamily& family) {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidArgument, m); };
  std::visit(overloaded{
                 [&](const RankAtMost& s) {
                   if (s.n < 1 || s.r < 1 || s.r > s.n) bad("rank family needs 1 <= r <= n");
                 },
                 [&](const AllOnes& s) {
                   if (s.n < 1 || s.n > 20) bad("allones family needs 1 <= n <= 20");
                 },
                 [](const DetMagOne&) {},
                 [](const ParabolaPair&) {},
                 [&](const FermatSphere& s) {
                   if (s.n < 1) bad("fermat family needs n >= 1");
                   if (s.d < 2 || s.d % 2 != 0) bad("fermat exponent d must be even and >= 2");
                 },
                 [&](const AxisUnion& s) {
                   if (s.n < 1) bad("axes family needs n >= 1");
                 },
                 [&](const PlaneCurve& s) {
                   if (s.f.total_degree() < 1) bad("curve needs a nonconstant polynomial");
                 },
             },
             family);
}

BiPoly defining_polynomial(const SliceFamily& family) {
  if (std::holds_alternative<DetMagOne>(family)) return detmag_poly();
  if (std::holds_alternative<ParabolaPair>(family)) return parabola_poly();
  if (const auto* f = std::get_if<FermatSphere>(&family); f && f->n == 2) return fermat_poly(f->d);
  if (const auto* c = std::get_if<PlaneCurve>(&family)) return c->f;
  throw Error(ErrorCode::InvalidArgument, family_name(family) + " is not a plane curve family");
}

double membership_residual(const SliceFamily& family, const RVec& x) {
  if (x.size() != dimension(family)) throw Error(ErrorCode::ShapeMismatch, "point has the wrong length");
  return std::visit(
      overloaded{
          [&](const RankAtMost& s) {
            std::vector<double> m(x.data(), x.data() + x.size());
            for (double& v : m) v = std::abs(v);
            std::sort(m.begin(), m.end());
            double excess = 0.0;
            for (int i = 0; i < s.n - s.r; ++i) excess += m[static_cast<std::size_t>(i)];
            return excess / std::max(1.0, x.norm());
          },
          [&](const AllOnes&) { return (x.cwiseAbs().array() - 1.0).abs().maxCoeff(); },
          [&](const DetMagOne&) { return std::abs(std::abs(x(0) * x(1)) - 1.0); },
          [&](const ParabolaPair&) {
            const double r0 = std::abs(x(1) - x(0) * x(0)) / (1.0 + x(0) * x(0));
            const double r1 = std::abs(x(0) - x(1) * x(1)) / (1.0 + x(1) * x(1));
            return std::min(r0, r1);
          },
          [&](const FermatSphere& s) { return std::abs(x.array().pow(double(s.d)).sum() - 1.0); },
          [&](const AxisUnion&) {
            double total = x.cwiseAbs().sum() - inf_norm(x);
            return total / std::max(1.0, x.norm());
          },
          [&](const PlaneCurve& s) {
            return std::abs(s.f(x(0), x(1))) / std::max(1e-300, s.f.magnitude_at(x(0), x(1)));
          },
      },
      family);
}

RMat tangent_basis(const SliceFamily& family, const RVec& x, int branch) {
  if (x.size() != dimension(family)) throw Error(ErrorCode::ShapeMismatch, "point has the wrong length");
  return std::visit(
      overloaded{
          [&](const RankAtMost& s) { return coordinate_columns(support(x), s.n); },
          [&](const AllOnes& s) { return RMat(RMat::Zero(s.n, 0)); },
          [&](const AxisUnion& s) { return coordinate_columns(support(x), s.n); },
          [&](const DetMagOne&) {
            RVec g(2);
            g << 2 * x(0) * x(1) * x(1), 2 * x(0) * x(0) * x(1);
            return gradient_complement(g);
          },
          [&](const ParabolaPair&) {
            int b = branch;
            if (b < 0) {
              const double r0 = std::abs(x(1) - x(0) * x(0));
              const double r1 = std::abs(x(0) - x(1) * x(1));
              b = r0 <= r1 ? 0 : 1;
            }
            RVec g(2);
            if (b == 0)
              g << -2 * x(0), 1.0;
            else
              g << 1.0, -2 * x(1);
            return gradient_complement(g);
          },
          [&](const FermatSphere& s) {
            RVec g = double(s.d) * x.array().pow(double(s.d - 1)).matrix();
            return gradient_complement(g);
          },
          [&](const PlaneCurve& s) { return gradient_complement(RVec(s.f.gradient(x(0), x(1)))); },
      },
      family);
}

double orthogonality_residual(const RMat& tangent, const RVec& x, const RVec& y) {
  const RVec r = x - y;
  const double rn = r.norm();
  if (rn == 0.0) return 0.0;
  double worst = 0.0;
  for (Eigen::Index j = 0; j < tangent.cols(); ++j) {
    const double an = tangent.col(j).norm();
    if (an == 0.0) continue;
    worst = std::max(worst, std::abs(r.dot(tangent.col(j))) / (rn * an));
  }
  return worst;
}

std::vector<RVec> symmetrize_orbit(const RVec& x) {
  const Eigen::Index n = x.size();
  if (n > 8) throw Error(ErrorCode::InvalidArgument, "orbit enumeration is limited to n <= 8");
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index(0));
  auto less = [](const RVec& a, const RVec& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  };
  std::set<RVec, decltype(less)> seen(less);
  do {
    for (long long bits = 0; bits < (1LL << n); ++bits) {
      RVec v(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        // -0.0 and 0.0 compare equal, so fixed points collapse.
        const double s = (bits >> i) & 1 ? -1.0 : 1.0;
        v(i) = s * x(perm[static_cast<std::size_t>(i)]) + 0.0;
      }
      seen.insert(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

BiPoly critical_curve(const BiPoly& f, const RVec& y) {
  return (BiPoly::x1() - BiPoly::constant(y(0))) * f.d_x2() - (BiPoly::x2() - BiPoly::constant(y(1))) * f.d_x1();
}

std::vector<Eigen::Vector2d> solve_plane_system(const BiPoly& f, const BiPoly& g, double node_radius,
                                                const Tolerances& tol) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::NonGenericData, "system has a vanishing equation");
  if (f.degree_x2() < 1 || g.degree_x2() < 1) {
    if (f.degree_x1() < 1 || g.degree_x1() < 1)
      throw Error(ErrorCode::NonGenericData, "system is degenerate in both variables");
    auto swapped = solve_plane_system(f.swapped(), g.swapped(), node_radius, tol);
    for (auto& p : swapped) std::swap(p(0), p(1));
    std::sort(swapped.begin(), swapped.end(),
              [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a(0) != b(0) ? a(0) < b(0) : a(1) < b(1); });
    return swapped;
  }
  const RPoly res = resultant_x2(f, g, node_radius);
  if (res.is_zero()) throw Error(ErrorCode::NonGenericData, "resultant vanishes identically (common component)");

  const BiPoly fx = f.d_x1(), fy = f.d_x2(), gx = g.d_x1(), gy = g.d_x2();
  auto polish = [&](Eigen::Vector2d p) {
    for (int it = 0; it < 60; ++it) {
      Eigen::Matrix2d J;
      J << fx(p(0), p(1)), fy(p(0), p(1)), gx(p(0), p(1)), gy(p(0), p(1));
      const Eigen::Vector2d F(f(p(0), p(1)), g(p(0), p(1)));
      const double det = J.determinant();
      if (det == 0.0 || !std::isfinite(det)) break;
      const Eigen::Vector2d step = J.inverse() * F;
      if (!step.allFinite()) break;
      p -= step;
      if (step.cwiseAbs().maxCoeff() <= 1e-15 * std::max(1.0, p.cwiseAbs().maxCoeff())) break;
    }
    return p;
  };

  struct Candidate {
    Eigen::Vector2d p;
    double residual;
  };
  std::vector<Candidate> accepted;
  auto consider = [&](Eigen::Vector2d p) {
    p = polish(p);
    if (!p.allFinite()) return;
    const double rf = std::abs(f(p(0), p(1))) / std::max(1e-300, f.magnitude_at(p(0), p(1)));
    const double rg = std::abs(g(p(0), p(1))) / std::max(1e-300, g.magnitude_at(p(0), p(1)));
    if (rf > 1e-10 || rg > tol.backsub_residual) return;
    const double r = std::max(rf, rg);
    for (auto& c : accepted) {
      if ((c.p - p).cwiseAbs().maxCoeff() <= tol.cluster_radius) {
        if (r < c.residual) c = {p, r};
        return;
      }
    }
    accepted.push_back({p, r});
  };

  // Back substitution into both equations. A multiple root in x2 splits into
  // a complex cluster when x1 is slightly off, so the near-real window is wide;
  // Newton polishing and the residual filter weed out the extras.
  for (double x1 : real_root_candidates(res)) {
    for (const BiPoly* e : {&f, &g}) {
      const RPoly h = e->in_x2(x1).trimmed();
      if (h.is_zero() || h.degree() < 1) continue;
      for (double x2 : real_root_candidates(h, 0.1)) consider(Eigen::Vector2d(x1, x2));
    }
  }
  std::sort(accepted.begin(), accepted.end(), [](const Candidate& a, const Candidate& b) {
    return a.p(0) != b.p(0) ? a.p(0) < b.p(0) : a.p(1) < b.p(1);
  });
  std::vector<Eigen::Vector2d> out;
  out.reserve(accepted.size());
  for (const auto& c : accepted) out.push_back(c.p);
  return out;
}

GenericityReport genericity_check(const SliceFamily& family, const RVec& y, double eps) {
  return analyze(family, y, eps, default_tolerances()).report;
}

EdCriticalSet ed_critical(const SliceFamily& family, const RVec& y, const Tolerances& tol) {
  Analysis a = analyze(family, y, tol.genericity_eps, tol);
  if (!a.report.slice_ok) {
    std::ostringstream msg;
    msg << "y is not generic for " << family_name(family) << ":";
    for (const auto& r : a.report.reasons) msg << " " << r << ";";
    throw Error(ErrorCode::NonGenericData, msg.str());
  }
  EdCriticalSet set = std::move(a.raw->set);
  set.genericity_ok = a.report.generic();
  set.residuals.clear();
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    const RVec& x = set.points[i];
    const double mem = membership_residual(family, x);
    const double orth = orthogonality_residual(tangent_basis(family, x, set.branches[i]), x, y);
    if (mem > tol.membership * std::max(1.0, x.norm()) || orth > tol.orthogonality)
      throw Error(ErrorCode::SolverFailure, "critical point failed certification");
    set.residuals.push_back(std::max(mem, orth));
  }
  return set;
}

}  // namespace hdcrit
