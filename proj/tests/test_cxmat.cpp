#include <doctest.h>

#include <Eigen/SVD>

#include "hdcrit/cxmat.hpp"
#include "hdcrit/matrix_json.hpp"

using namespace hdcrit;

namespace {

double unitary_defect(const CMat& Q) {
  return (Q.adjoint() * Q - CMat::Identity(Q.cols(), Q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("svd of random shapes agrees with Eigen") {
  Rng rng(11);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dim(rng), t = dim(rng);
    const CMat A = random_ginibre(n, t, rng);
    const SvdFactors f = svd(A);
    const SvdCheck c = check_svd(f, A);
    REQUIRE(c.descending);
    CHECK(c.reconstruction <= 1e-12);
    CHECK(c.u_orthonormality <= 1e-12 * n);
    CHECK(c.v_orthonormality <= 1e-12 * t);
    CHECK(f.U.rows() == n);
    CHECK(f.V.rows() == t);

    Eigen::JacobiSVD<CMat> ref(A);
    const RVec diff = f.sigma - ref.singularValues();
    CHECK(diff.cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, ref.singularValues()(0)));
  }
}

TEST_CASE("real scalar svd") {
  Rng rng(3);
  std::normal_distribution<double> g;
  RMat A(5, 3);
  for (Eigen::Index i = 0; i < A.size(); ++i) A(i) = g(rng);
  const auto f = jacobi_svd(A);
  CHECK((f.reconstruct() - A).norm() <= 1e-12 * A.norm());
  CHECK((f.U.transpose() * f.U - RMat::Identity(5, 5)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("phase convention: largest entry of each right vector is real positive") {
  Rng rng(5);
  const CMat A = random_ginibre(3, 4, rng);
  const SvdFactors f = svd(A);
  for (Eigen::Index i = 0; i < f.V.cols(); ++i) {
    Eigen::Index k;
    f.V.col(i).cwiseAbs().maxCoeff(&k);
    CHECK(std::abs(f.V(k, i).imag()) <= 1e-14);
    CHECK(f.V(k, i).real() > 0.0);
  }
  // same input, same factors
  const SvdFactors g = svd(A);
  CHECK((f.U - g.U).norm() == 0.0);
}

TEST_CASE("diagonal input keeps its singular values") {
  RVec d(3);
  d << 1.0, 3.0, 2.0;
  const SvdFactors f = svd(diag_matrix(d, 3, 3));
  CHECK(f.sigma(0) == doctest::Approx(3.0));
  CHECK(f.sigma(1) == doctest::Approx(2.0));
  CHECK(f.sigma(2) == doctest::Approx(1.0));
}

TEST_CASE("zero and rank deficient matrices") {
  const SvdFactors z = svd(CMat::Zero(2, 3));
  CHECK(z.sigma.norm() == 0.0);
  CHECK(unitary_defect(z.V) <= 1e-14);

  Rng rng(8);
  const CVec u = random_ginibre(4, 1, rng), v = random_ginibre(3, 1, rng);
  const CMat A = u * v.adjoint();
  const SvdFactors f = svd(A);
  CHECK(f.sigma(1) <= 1e-12 * f.sigma(0));
  CHECK(unitary_defect(f.U) <= 1e-12);
  CHECK(unitary_defect(f.V) <= 1e-12);
}

TEST_CASE("non-finite input is rejected") {
  CMat A = CMat::Identity(2, 2);
  A(0, 1) = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(require_finite(A), Error);
}

TEST_CASE("Haar unitaries are unitary and reproducible") {
  for (Eigen::Index n : {1, 2, 5, 8}) {
    const CMat Q = random_unitary(n, 42);
    CHECK(unitary_defect(Q) <= 1e-13);
    CHECK((Q - random_unitary(n, 42)).norm() == 0.0);
  }
}

TEST_CASE("skew basis spans u(n)") {
  for (Eigen::Index n : {1, 2, 3, 4}) {
    const auto basis = skew_basis(n);
    REQUIRE(basis.size() == static_cast<std::size_t>(n * n));
    for (const auto& Z : basis) CHECK((Z + Z.adjoint()).norm() == 0.0);
    CHECK(numerical_rank(stack_real_coordinates(basis), 1e-12) == n * n);
  }
}

TEST_CASE("hermitian/skew split and inner products") {
  Rng rng(9);
  const CMat A = random_ginibre(3, 3, rng), B = random_ginibre(3, 3, rng);
  const HermSkew hs = herm_skew_split(A);
  CHECK((hs.hermitian + hs.skew - A).norm() <= 1e-14);
  CHECK((hs.hermitian - hs.hermitian.adjoint()).norm() <= 1e-14);
  CHECK(std::abs(real_inner(hs.hermitian, hs.skew)) <= 1e-13);

  const cplx ref = (A * B.adjoint()).trace();
  CHECK(std::abs(hermitian_inner(A, B) - ref) <= 1e-13);
  CHECK(real_inner(A, B) == doctest::Approx(real_coordinates(A).dot(real_coordinates(B))));
  CHECK((from_real_coordinates(real_coordinates(A), 3, 3) - A).norm() == 0.0);
  CHECK_THROWS_AS(hermitian_inner(A, CMat::Zero(2, 3)), Error);
}

TEST_CASE("nullspace and rank") {
  RMat M(2, 4);
  M << 1, 0, 1, 0,
       0, 1, 0, 1;
  CHECK(numerical_rank(M, 1e-12) == 2);
  const RMat N = nullspace(M, 1e-12);
  CHECK(N.cols() == 2);
  CHECK((M * N).norm() <= 1e-14);
}

TEST_CASE("matrix JSON round trip and errors") {
  Rng rng(1);
  const CMat A = random_ginibre(2, 3, rng);
  CHECK(matrix_from_json(matrix_to_json(A)) == A);

  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":1,"entries":[[[1,0]]]})")), Error);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[[1]]]})")), Error);
  try {
    parse_json_text("{\n  \"rows\": 1,\n  \"cols\" 2\n}");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}
