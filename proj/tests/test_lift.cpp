#include <doctest.h>

#include <algorithm>

#include "hdcrit/lift.hpp"
#include "hdcrit/verify.hpp"

using namespace hdcrit;

namespace {

CMat with_spectrum(const RVec& s, Eigen::Index n, Eigen::Index t, std::uint64_t seed) {
  return random_unitary(n, seed) * diag_matrix(s, n, t) * random_unitary(t, seed + 1);
}

// t^m coefficients of det(s I - M) by Faddeev-LeVerrier.
RPoly charpoly(const CMat& M) {
  const Eigen::Index m = M.rows();
  RPoly::Coeffs c = RPoly::Coeffs::Zero(m + 1);
  c(m) = 1.0;
  CMat N = CMat::Identity(m, m);
  for (Eigen::Index k = 1; k <= m; ++k) {
    const CMat MN = M * N;
    const double ck = -MN.trace().real() / double(k);
    c(m - k) = ck;
    N = MN + ck * CMat::Identity(m, m);
  }
  return RPoly(c);
}

}  // namespace

TEST_CASE("det-magnitude lift with sigma = (3.2, 3) gives 6 points") {
  RVec s(2);
  s << 3.2, 3.0;
  const CMat Y = with_spectrum(s, 2, 2, 17);
  const auto pts = lift_critical(Y, DetMagOne{});
  REQUIRE(pts.size() == 6);
  for (const auto& p : pts) {
    CHECK(p.residual <= 1e-9);
    CHECK(std::abs(std::abs(p.X.determinant()) - 1.0) <= 1e-10);
    CHECK(sim_decomposition_check(Y, p.X, 1e-9).ok);
  }
}

TEST_CASE("unitary group lift: 2^n points, sign patterns of the SVD frame") {
  for (int n = 2; n <= 4; ++n) {
    Rng rng(100 + n);
    const CMat Y = random_ginibre(n, n, rng);
    const auto pts = lift_critical(Y, AllOnes{n});
    REQUIRE(pts.size() == std::size_t(1) << n);
    for (const auto& p : pts) {
      CHECK((p.X.adjoint() * p.X - CMat::Identity(n, n)).norm() <= 1e-11);
      CHECK(p.residual <= 1e-9);
    }
    // the polar factor is the nearest point
    const auto best = std::min_element(pts.begin(), pts.end(),
                                       [](const auto& a, const auto& b) { return a.distance_sq < b.distance_sq; });
    CHECK(best->source_x.minCoeff() == 1.0);
  }
}

TEST_CASE("lift refuses repeated or zero singular values") {
  RVec s(2);
  s << 3.0, 3.0;
  CHECK_THROWS_WITH_AS(lift_critical(with_spectrum(s, 2, 2, 1), DetMagOne{}), doctest::Contains("DegenerateSpectrum"),
                       Error);
  s << 3.0, 0.0;
  CHECK_THROWS_AS(lift_critical(with_spectrum(s, 2, 2, 1), RankAtMost{2, 1}), Error);
  CHECK_THROWS_AS(lift_critical(CMat::Identity(3, 3), DetMagOne{}), Error);
}

TEST_CASE("lift equivariance: left and right unitary actions commute with lifting") {
  Rng rng(4);
  const CMat Y = random_ginibre(2, 3, rng);
  const CMat P = random_unitary(2, rng), Q = random_unitary(3, rng);
  const auto a = lift_critical(Y, RankAtMost{2, 1});
  const auto b = lift_critical(P * Y * Q, RankAtMost{2, 1});
  std::vector<CMat> moved, direct;
  for (const auto& p : a) moved.push_back(P * p.X * Q);
  for (const auto& p : b) direct.push_back(p.X);
  CHECK(hausdorff_distance(moved, direct) <= 1e-10);
}

TEST_CASE("Eckart-Young on diag(1, 3, 2)") {
  RVec s(3);
  s << 1.0, 3.0, 2.0;
  const CMat Y = diag_matrix(s, 3, 3);
  const auto pts = eckart_young(Y, 2);
  REQUIRE(pts.size() == 3);
  std::vector<double> d;
  for (const auto& p : pts) d.push_back(p.distance_sq);
  std::sort(d.begin(), d.end());
  CHECK(d[0] == doctest::Approx(1.0));
  CHECK(d[1] == doctest::Approx(4.0));
  CHECK(d[2] == doctest::Approx(9.0));
  // first subset is the truncated SVD
  CHECK(pts.front().distance_sq == doctest::Approx(1.0));
}

TEST_CASE("Eckart-Young counts and minimum on random 4 x 6") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat Y = random_ginibre(4, 6, rng);
    const RVec sig = svd(Y).sigma;
    for (int k = 1; k <= 3; ++k) {
      const auto pts = eckart_young(Y, k);
      const std::size_t expect = k == 2 ? 6 : 4;
      CHECK(pts.size() == expect);
      CHECK(pts.front().distance_sq == doctest::Approx(sig.tail(4 - k).squaredNorm()).epsilon(1e-10));
      for (const auto& p : pts) CHECK(p.residual <= 1e-8);
    }
  }
}

TEST_CASE("Eckart-Young errors") {
  RVec s(3);
  s << 2.0, 1.0, 0.0;
  CHECK_THROWS_WITH_AS(eckart_young(diag_matrix(s, 3, 3), 3), doctest::Contains("RankTooSmall"), Error);
  s << 2.0, 2.0, 1.0;
  CHECK_THROWS_WITH_AS(eckart_young(diag_matrix(s, 3, 3), 1), doctest::Contains("DegenerateSpectrum"), Error);
  CHECK_THROWS_AS(eckart_young(CMat::Identity(2, 2), 0), Error);
}

TEST_CASE("distance polynomial, frozen and against the characteristic polynomial") {
  RVec s(3);
  s << 3.0, 2.0, 1.0;
  const HdPoly p = hd_poly(diag_matrix(s, 3, 3), 1);
  REQUIRE(p.degree() == 3);
  CHECK(p.coeffs_t2.coeff(0) == doctest::Approx(-650.0));
  CHECK(p.coeffs_t2.coeff(1) == doctest::Approx(245.0));
  CHECK(p.coeffs_t2.coeff(2) == doctest::Approx(-28.0));
  CHECK(p.coeffs_t2.coeff(3) == 1.0);
  CHECK(p.at_t(std::sqrt(13.0)) == doctest::Approx(0.0).epsilon(1e-9));

  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat Y = random_ginibre(5, 7, rng);
    const RPoly a = hd_poly(Y, 4).coeffs_t2, b = charpoly(Y * Y.adjoint());
    REQUIRE(a.degree() == 5);
    for (int i = 0; i <= 5; ++i) CHECK(std::abs(a.coeff(i) - b.coeff(i)) <= 1e-9 * std::abs(b.coeff(i)));
  }
  CHECK_THROWS_AS(hd_poly(CMat::Identity(2, 2), 3), Error);
}

TEST_CASE("sim check flags a non-diagonal X") {
  RVec s(2);
  s << 2.0, 1.0;
  const CMat Y = with_spectrum(s, 2, 2, 9);
  const SvdFactors f = svd(Y);
  RVec x(2);
  x << 1.0, 0.0;
  CHECK(sim_decomposition_check(Y, f.U * diag_matrix(x, 2, 2) * f.V.adjoint(), 1e-10).ok);
  CHECK_FALSE(sim_decomposition_check(Y, random_unitary(2, 77), 1e-6).ok);
}
