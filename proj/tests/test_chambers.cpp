#include <doctest.h>

#include <sstream>

#include "hdcrit/chambers.hpp"

using namespace hdcrit;

namespace {

RVec vec(double a, double b) {
  RVec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("det-magnitude discriminants, frozen values") {
  auto [p, m] = detmag_discriminants(vec(3, 3));
  CHECK(p == 500.0);
  CHECK(m == -8788.0);
  std::tie(p, m) = detmag_discriminants(vec(0, 0));
  CHECK(p == -256.0);
  CHECK(m == -256.0);
  // sigma = (3.2, 3), used for lifting
  std::tie(p, m) = detmag_discriminants(vec(3.2, 3));
  CHECK(p == doctest::Approx(660.9488).epsilon(1e-12));
  CHECK(detmag_predicted_count(vec(3, 3)) == 6);
  CHECK(detmag_predicted_count(vec(0, 0)) == 4);
}

TEST_CASE("predictions refuse points on a discriminant") {
  // D+ vanishes between (2, 2) and (3, 3) on the diagonal; find it by bisection
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    (detmag_discriminants(vec(mid, mid)).first > 0 ? hi : lo) = mid;
  }
  CHECK_THROWS_AS(detmag_predicted_count(vec(lo, lo)), Error);
  CHECK_THROWS_AS(parabola_predicted_count(vec(0.0, 0.5)), Error);
}

TEST_CASE("parabola evolute margins") {
  auto [m1, m2] = parabola_evolute_margin(vec(0, 1));
  CHECK(m1 == doctest::Approx(2.0));
  CHECK(m2 == doctest::Approx(-27.0 - 2.0));
  CHECK(parabola_predicted_count(vec(0, 1)) == 4);
  CHECK(parabola_predicted_count(vec(3, 3)) == 6);
  CHECK(parabola_predicted_count(vec(-1, -1)) == 2);
}

TEST_CASE("grid ordering is x outer, endpoints inclusive") {
  const auto pts = Grid{-1, 1, 0, 0.5, 0.25}.points();
  REQUIRE(pts.size() == 9 * 3);
  CHECK(pts[0] == vec(-1, 0));
  CHECK(pts[1] == vec(-1, 0.25));
  CHECK(pts.back()(0) == doctest::Approx(1.0));
  CHECK_THROWS_AS((Grid{1, 0, 0, 1, 0.5}.points()), Error);
}

TEST_CASE("classify_point agrees and skips") {
  const auto r = classify_point(DetMagOne{}, vec(3, 3));
  REQUIRE(r.predicted);
  CHECK(*r.predicted == 6);
  CHECK(r.observed == 6);
  CHECK(r.agree);
  CHECK(r.invariants.at("Dplus") == 500.0);

  const auto s = classify_point(ParabolaPair{}, vec(0.0, 0.5));
  CHECK(s.skipped());

  const auto f = classify_point(FermatSphere{2, 4}, vec(0.1, 0.05));
  CHECK_FALSE(f.predicted);
  CHECK(f.observed == 8);
}

TEST_CASE("scan is deterministic across thread counts") {
  const Grid g{-2, 2, -2, 2, 0.5};
  const auto one = chamber_scan(DetMagOne{}, g, 1);
  const auto many = chamber_scan(DetMagOne{}, g, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].y == many[i].y);
    CHECK(one[i].observed == many[i].observed);
  }
  std::ostringstream a, b;
  write_chamber_csv(a, one);
  write_chamber_csv(b, many);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("y1,y2,Dplus,Dminus,m1,m2,predicted,observed,agree,skipped_reason\n", 0) == 0);
}

TEST_CASE("parabola scan has no disagreements") {
  for (const auto& r : chamber_scan(ParabolaPair{}, Grid{-3, 4, -3, 4, 0.5}, 0)) {
    if (r.skipped()) continue;
    CHECK(r.agree);
  }
}
