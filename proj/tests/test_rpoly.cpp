#include <doctest.h>

#include "hdcrit/bipoly.hpp"
#include "hdcrit/polynomial.hpp"

using namespace hdcrit;

TEST_CASE("evaluation, derivative, arithmetic") {
  const RPoly p{-1.0, 0.0, 1.0};  // t^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p(3.0) == 8.0);
  CHECK(p.derivative()(2.0) == 4.0);
  const RPoly q = p * RPoly{2.0, 1.0};
  CHECK(q.degree() == 3);
  CHECK(q(1.5) == doctest::Approx(p(1.5) * 3.5));
  CHECK(RPoly().degree() == -1);
}

TEST_CASE("sturm counts") {
  // (t-1)(t-2)(t-3)
  const RPoly p = RPoly{-1.0, 1.0} * RPoly{-2.0, 1.0} * RPoly{-3.0, 1.0};
  CHECK(sturm_count(p, 0.0, 4.0) == 3);
  CHECK(sturm_count(p, 1.5, 2.5) == 1);
  CHECK(sturm_count(p, 3.5, 9.0) == 0);
  CHECK(sturm_count(RPoly{1.0, 0.0, 1.0}, -10.0, 10.0) == 0);
}

TEST_CASE("real roots of well separated and clustered polynomials") {
  const RPoly p = RPoly{-1.0, 1.0} * RPoly{-2.0, 1.0} * RPoly{-3.0, 1.0};
  const auto r = real_roots(p);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(3.0).epsilon(1e-12));

  const RPoly close = RPoly{-1.0, 1.0} * RPoly{-(1.0 + 1e-6), 1.0};
  CHECK(real_roots(close).size() == 2);

  // double root is found once and flagged
  const auto d = real_roots_detailed(RPoly{-2.0, 1.0} * RPoly{-2.0, 1.0} * RPoly{5.0, 1.0});
  REQUIRE(d.size() == 2);
  CHECK(d[1].value == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(d[1].multiple);
  CHECK_FALSE(d[0].multiple);

  CHECK(real_roots(RPoly{1.0, 0.0, 0.0, 0.0, 1.0}).empty());

  // tiny cubic term: the Sturm chain has a quotient near 1e12
  const RPoly q{-1.0, -4.4342963043356507, 0.0, 0.0039903217537275992, 1.0};
  CHECK(real_roots(q).size() == 2);
  CHECK(sturm_count(q, -10.0, 10.0) == 2);
  // even smaller: the exact final remainder is below rounding, so the chain
  // has to drop the negligible t^2 term of the first remainder
  for (double y1 : {5.6419384604211587e-05, 1e-9, -3e-12}) {
    const RPoly w{-1.0, 2.1206046452611851, 0.0, -y1, 1.0};
    CHECK(real_roots(w).size() == 2);
    CHECK(sturm_count(w, -100.0, 100.0) == 2);
  }
  CHECK_THROWS_AS(real_roots(RPoly()), Error);
}

TEST_CASE("wilkinson-like degree 10") {
  RPoly p = RPoly::constant(1.0);
  for (int k = 1; k <= 10; ++k) p = p * RPoly{-double(k), 1.0};
  const auto r = real_roots(p);
  REQUIRE(r.size() == 10);
  for (int k = 1; k <= 10; ++k) CHECK(r[k - 1] == doctest::Approx(k).epsilon(1e-9));
}

TEST_CASE("quartic discriminant frozen values") {
  // t^4 - y1 t^3 + y2 t - 1 at y = (0, 0) and (3, 3)
  CHECK(quartic_discriminant(RPoly{-1.0, 0.0, 0.0, 0.0, 1.0}) == -256.0);
  CHECK(quartic_discriminant(RPoly{-1.0, 3.0, 0.0, -3.0, 1.0}) == 500.0);
  CHECK(quartic_discriminant(RPoly{-1.0, -3.0, 0.0, -3.0, 1.0}) == -8788.0);
  // (t-1)^2 (t+2) (t-3) has a repeated root
  const RPoly rep = RPoly{-1.0, 1.0} * RPoly{-1.0, 1.0} * RPoly{2.0, 1.0} * RPoly{-3.0, 1.0};
  CHECK(quartic_discriminant(rep) == doctest::Approx(0.0));
  CHECK_THROWS_AS(quartic_discriminant(RPoly{1.0, 1.0}), Error);
}

TEST_CASE("resultant eliminates x2") {
  // circle and line x2 = x1: resultant ~ 2 x1^2 - 1
  const BiPoly circle = BiPoly::x1() * BiPoly::x1() + BiPoly::x2() * BiPoly::x2() - BiPoly::constant(1.0);
  const BiPoly line = BiPoly::x2() - BiPoly::x1();
  const RPoly r = resultant_x2(circle, line).trimmed();
  REQUIRE(r.degree() == 2);
  CHECK(std::abs(r.coeff(1)) <= 1e-12 * r.max_norm());
  CHECK(r.coeff(0) / r.coeff(2) == doctest::Approx(-0.5));

  // common factor -> identically zero resultant
  const BiPoly h = circle * line;
  CHECK(resultant_x2(h, line * BiPoly::x1()).is_zero());
}

TEST_CASE("sylvester determinant") {
  RPoly::Coeffs a(2), b(2);
  a << -1.0, 1.0;  // x - 1
  b << -2.0, 1.0;  // x - 2
  CHECK(std::abs(sylvester_determinant(a, b)) == doctest::Approx(1.0));
}

TEST_CASE("complex roots") {
  const auto z = complex_roots(RPoly{1.0, 0.0, 1.0});
  REQUIRE(z.size() == 2);
  for (const auto& r : z) CHECK(std::abs(std::abs(r.imag()) - 1.0) <= 1e-12);
  // candidates may repeat; every one must sit on a root
  const auto c = real_root_candidates(RPoly{-2.0, 0.0, 1.0});
  CHECK(c.size() >= 2);
  for (double x : c) CHECK(std::abs(std::abs(x) - std::sqrt(2.0)) <= 1e-12);
}
