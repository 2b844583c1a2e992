#include <doctest.h>

#include <algorithm>

#include "hdcrit/verify.hpp"

using namespace hdcrit;

namespace {

RVec vec(std::initializer_list<double> v) {
  RVec out(static_cast<Eigen::Index>(v.size()));
  std::copy(v.begin(), v.end(), out.data());
  return out;
}

}  // namespace

TEST_CASE("trace value on the unitary group") {
  const cplx tr = unitary_tangent_trace();
  CHECK(std::abs(tr - cplx(0.0, -4.0)) <= 1e-12);
}

TEST_CASE("criticality oracle: truncated SVD passes, a perturbation fails") {
  RVec s(2);
  s << 2.0, 1.0;
  const CMat U = random_unitary(2, 3), V = random_unitary(2, 4);
  const CMat Y = U * diag_matrix(s, 2, 2) * V.adjoint();
  const RVec x = vec({2.0, 0.0});
  const RMat slice = RMat::Identity(2, 1);  // T_x of the x1 axis
  const TangentFrame frame = tangent_frame(U, x, V, slice);
  const CMat X = U * diag_matrix(x, 2, 2) * V.adjoint();
  CHECK(is_hd_critical(Y, X, frame, 1e-12).ok);

  const RVec bad = vec({1.7, 0.0});
  const CMat Xb = U * diag_matrix(bad, 2, 2) * V.adjoint();
  const auto r = is_hd_critical(Y, Xb, tangent_frame(U, bad, V, slice), 1e-8);
  CHECK_FALSE(r.ok);
  CHECK(r.max_residual > 0.1);
}

TEST_CASE("rank-1 tangent space of 2 x 2 has real dimension 6") {
  RVec s(2);
  s << 2.0, 0.0;
  const TangentFrame f = tangent_frame(CMat::Identity(2, 2), s, CMat::Identity(2, 2), RMat::Identity(2, 1));
  CHECK(f.rank == 6);
}

TEST_CASE("splitting ranks") {
  const auto a = check_splitting(vec({2.0, 1.0}), 2, 2);
  CHECK(a.ok);
  CHECK(a.orbit_rank == 6);
  CHECK(a.cross_gram <= 1e-10);
  const auto b = check_splitting(vec({3.0, 2.0, 1.0}), 3, 4);
  CHECK(b.orbit_rank == 21);
  CHECK(b.expected_rank == 21);
  CHECK_THROWS_WITH_AS(check_splitting(vec({1.0, -1.0}), 2, 2), doctest::Contains("DegenerateY"), Error);
  CHECK_THROWS_AS(check_splitting(vec({1.0, 0.0}), 2, 3), Error);
}

TEST_CASE("rd solution space: real diagonals only for distinct entries") {
  const auto basis = rd_solution_space(vec({3.0, 1.0, 2.0}), 3, 5);
  REQUIRE(basis.size() == 3);
  for (const auto& A : basis) {
    CMat off = A;
    off.diagonal().setZero();
    CHECK(off.norm() <= 1e-10);
    CHECK(A.diagonal().imag().norm() <= 1e-10);
  }
  CHECK(rd_solution_space(vec({1.0, 1.0}), 2, 2).size() > 2);
}

TEST_CASE("brute force on diag(2, 1) finds the two rank-one points") {
  CMat Y = CMat::Zero(2, 2);
  Y(0, 0) = 2.0;
  Y(1, 1) = 1.0;
  const auto pts = brute_force_hd(Y, BruteVariety::Rank1, 200, 7, 2);
  REQUIRE(pts.size() == 2);
  CMat a = CMat::Zero(2, 2), b = CMat::Zero(2, 2);
  a(0, 0) = 2.0;
  b(1, 1) = 1.0;
  CHECK(hausdorff_distance({pts[0].X, pts[1].X}, {a, b}) <= 1e-8);
  CHECK(pts[0].distance_sq == doctest::Approx(1.0));
}

TEST_CASE("brute force and lift agree on a det-magnitude instance") {
  RVec s(2);
  s << 3.2, 3.0;
  const CMat Y = random_unitary(2, 8) * diag_matrix(s, 2, 2) * random_unitary(2, 9);
  const auto brute = brute_force_hd(Y, BruteVariety::DetMag, 200, 1, 6);
  const auto lifted = lift_critical(Y, DetMagOne{});
  std::vector<CMat> a, b;
  for (const auto& p : brute) a.push_back(p.X);
  for (const auto& p : lifted) b.push_back(p.X);
  CHECK(a.size() == 6);
  CHECK(hausdorff_distance(a, b) <= 1e-6);
  CHECK_THROWS_AS(brute_force_hd(CMat::Identity(3, 3), BruteVariety::Rank1, 10, 1), Error);
}

TEST_CASE("hausdorff distance") {
  const CMat I = CMat::Identity(2, 2);
  CHECK(hausdorff_distance({I}, {I}) == 0.0);
  CHECK(hausdorff_distance({I}, {I, 2.0 * I}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("suites pass with small trial counts") {
  CHECK(lemma_rd_suite(1, 20).pass());
  CHECK(lemma_complex_suite(1, 20).pass());
  CHECK(skew_hermitian_suite(1, 20).pass());
  CHECK(splitting_suite(1, 20).pass());
  CHECK(oracle_suite(3, 3).pass());
}
