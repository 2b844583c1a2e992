#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "hdcrit/polynomial.hpp"

namespace hdcrit {

// Real polynomial in (x1, x2); coeffs(i, j) multiplies x1^i x2^j.
class BiPoly {
 public:
  BiPoly() : c_(Eigen::MatrixXd::Zero(1, 1)) {}
  explicit BiPoly(Eigen::MatrixXd c);

  static BiPoly constant(double v);
  static BiPoly x1();
  static BiPoly x2();
  static BiPoly monomial(int i, int j, double v = 1.0);

  const Eigen::MatrixXd& coeffs() const { return c_; }
  int degree_x1() const;  // -1 for the zero polynomial
  int degree_x2() const;
  int total_degree() const;
  bool is_zero() const { return degree_x1() < 0; }

  double operator()(double x1, double x2) const;
  // sum |c_ij| |x1|^i |x2|^j.
  double magnitude_at(double x1, double x2) const;
  Eigen::Vector2d gradient(double x1, double x2) const;

  BiPoly d_x1() const;
  BiPoly d_x2() const;
  // f(x1, .) as a polynomial in x2; keeps degree_x2() coefficients.
  RPoly in_x2(double x1) const;
  BiPoly swapped() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(double s, const BiPoly& a);

 private:
  void shrink();
  Eigen::MatrixXd c_;
};

BiPoly pow(const BiPoly& p, int k);

// Determinant of the Sylvester matrix of a and b with their nominal degrees.
double sylvester_determinant(const RPoly::Coeffs& a, const RPoly::Coeffs& b);

// Res_{x2}(f, g) as a polynomial in x1, up to a nonzero constant.
//
// Evaluation-interpolation: the Sylvester determinant (nominal x2-degrees) is
// sampled at D + 1 Chebyshev nodes on [-node_radius, node_radius], with D the
// smaller of deg1(f) deg2(g) + deg1(g) deg2(f) and the Bezout bound
// tdeg(f) tdeg(g). Throws DegreeOverflow above `max_degree`.
RPoly resultant_x2(const BiPoly& f, const BiPoly& g, double node_radius = 1.0, int max_degree = 48);

// All complex roots via the balanced companion matrix.
std::vector<std::complex<double>> complex_roots(const RPoly& p);

// Real parts of real roots (Sturm isolation) merged with the real parts of
// nearly-real companion eigenvalues. A superset of the real roots intended for
// subsequent certification.
std::vector<double> real_root_candidates(const RPoly& p, double imag_slack = 1e-2);

}  // namespace hdcrit
