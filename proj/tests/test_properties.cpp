// Randomized invariants across modules.
#include <doctest.h>

#include <algorithm>

#include "hdcrit/chambers.hpp"
#include "hdcrit/lift.hpp"
#include "hdcrit/verify.hpp"

using namespace hdcrit;

namespace {

bool same_set(std::vector<RVec> a, std::vector<RVec> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::none_of(b.begin(), b.end(), [&](const RVec& q) { return (p - q).norm() <= tol; })) return false;
  return true;
}

RVec uniform2(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  RVec y(2);
  y << u(rng), u(rng);
  return y;
}

}  // namespace

TEST_CASE("critical sets are equivariant under signed permutations") {
  Rng rng(12);
  RMat swap_flip(2, 2);
  swap_flip << 0, -1, 1, 0;
  const std::vector<SliceFamily> families{DetMagOne{}, FermatSphere{2, 4}};
  for (const auto& fam : families) {
    int done = 0;
    while (done < 25) {
      const RVec y = uniform2(rng, -2.0, 2.0);
      if (!genericity_check(fam, y).slice_ok) continue;
      std::vector<RVec> moved;
      for (const auto& x : ed_critical(fam, y).points) moved.push_back(swap_flip * x);
      CHECK(same_set(moved, ed_critical(fam, swap_flip * y).points, 1e-8));
      ++done;
    }
  }
}

TEST_CASE("det-magnitude observed count always matches the chamber prediction") {
  Rng rng(99);
  int checked = 0;
  while (checked < 300) {
    const RVec y = uniform2(rng, -5.0, 5.0);
    const auto [p, m] = detmag_discriminants(y);
    if (std::abs(p) <= 1e-3 || std::abs(m) <= 1e-3) continue;
    CHECK(ed_critical(DetMagOne{}, y).points.size() == std::size_t(detmag_predicted_count(y)));
    ++checked;
  }
}

TEST_CASE("the nearest critical point is the global minimum on the circle") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const RVec y = uniform2(rng, -3.0, 3.0);
    const auto set = ed_critical(FermatSphere{2, 2}, y);
    double best = 1e300;
    for (const auto& x : set.points) best = std::min(best, (x - y).norm());
    CHECK(best == doctest::Approx(std::abs(y.norm() - 1.0)).epsilon(1e-10));
  }
}

TEST_CASE("Eckart-Young distances are the roots of the distance polynomial") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat Y = random_ginibre(3, 4, rng);
    for (int r = 1; r <= 3; ++r) {
      const HdPoly p = hd_poly(Y, r);
      const double scale = p.coeffs_t2.magnitude_at(Y.squaredNorm());
      for (const auto& pt : eckart_young(Y, r)) CHECK(std::abs(p.coeffs_t2(pt.distance_sq)) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("HD critical points of unitarily conjugate data are conjugate") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat Y = random_ginibre(2, 2, rng);
    const CMat P = random_unitary(2, rng), Q = random_unitary(2, rng);
    const auto a = lift_critical(Y, DetMagOne{});
    const auto b = lift_critical(P * Y * Q, DetMagOne{});
    std::vector<CMat> ma, mb;
    for (const auto& p : a) ma.push_back(P * p.X * Q);
    for (const auto& p : b) mb.push_back(p.X);
    CHECK(hausdorff_distance(ma, mb) <= 1e-9);
  }
}

TEST_CASE("lifted distances equal slice distances") {
  Rng rng(8);
  const CMat Y = random_ginibre(3, 3, rng);
  const RVec s = svd(Y).sigma;
  for (const auto& p : lift_critical(Y, AllOnes{3}))
    CHECK(p.distance_sq == doctest::Approx((s - p.source_x).squaredNorm()).epsilon(1e-12));
}
