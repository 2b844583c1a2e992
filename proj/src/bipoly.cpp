#include "hdcrit/bipoly.hpp"

#include <unsupported/Eigen/Polynomials>

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hdcrit {

BiPoly::BiPoly(Eigen::MatrixXd c) : c_(std::move(c)) {
  if (c_.size() == 0) c_ = Eigen::MatrixXd::Zero(1, 1);
  if (!c_.allFinite()) throw Error(ErrorCode::InvalidArgument, "BiPoly coefficients must be finite");
  shrink();
}

BiPoly BiPoly::constant(double v) { return BiPoly(Eigen::MatrixXd::Constant(1, 1, v)); }
BiPoly BiPoly::x1() { return monomial(1, 0); }
BiPoly BiPoly::x2() { return monomial(0, 1); }
BiPoly BiPoly::monomial(int i, int j, double v) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(i + 1, j + 1);
  c(i, j) = v;
  return BiPoly(std::move(c));
}

void BiPoly::shrink() {
  Eigen::Index r = c_.rows(), k = c_.cols();
  while (r > 1 && c_.row(r - 1).cwiseAbs().maxCoeff() == 0.0) --r;
  while (k > 1 && c_.col(k - 1).cwiseAbs().maxCoeff() == 0.0) --k;
  c_ = c_.topLeftCorner(r, k).eval();
}

int BiPoly::degree_x1() const {
  for (Eigen::Index i = c_.rows() - 1; i >= 0; --i)
    if (c_.row(i).cwiseAbs().maxCoeff() != 0.0) return int(i);
  return -1;
}

int BiPoly::degree_x2() const {
  for (Eigen::Index j = c_.cols() - 1; j >= 0; --j)
    if (c_.col(j).cwiseAbs().maxCoeff() != 0.0) return int(j);
  return -1;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (Eigen::Index i = 0; i < c_.rows(); ++i)
    for (Eigen::Index j = 0; j < c_.cols(); ++j)
      if (c_(i, j) != 0.0) d = std::max(d, int(i + j));
  return d;
}

double BiPoly::operator()(double x1, double x2) const {
  double acc = 0.0;
  for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) {
    double row = 0.0;
    for (Eigen::Index j = c_.cols() - 1; j >= 0; --j) row = row * x2 + c_(i, j);
    acc = acc * x1 + row;
  }
  return acc;
}

double BiPoly::magnitude_at(double x1, double x2) const {
  double acc = 0.0;
  double p1 = 1.0;
  for (Eigen::Index i = 0; i < c_.rows(); ++i) {
    double p2 = 1.0;
    for (Eigen::Index j = 0; j < c_.cols(); ++j) {
      acc += std::abs(c_(i, j)) * p1 * p2;
      p2 *= std::abs(x2);
    }
    p1 *= std::abs(x1);
  }
  return acc;
}

Eigen::Vector2d BiPoly::gradient(double x1, double x2) const { return {d_x1()(x1, x2), d_x2()(x1, x2)}; }

BiPoly BiPoly::d_x1() const {
  if (c_.rows() == 1) return BiPoly();
  Eigen::MatrixXd d(c_.rows() - 1, c_.cols());
  for (Eigen::Index i = 1; i < c_.rows(); ++i) d.row(i - 1) = double(i) * c_.row(i);
  return BiPoly(std::move(d));
}

BiPoly BiPoly::d_x2() const {
  if (c_.cols() == 1) return BiPoly();
  Eigen::MatrixXd d(c_.rows(), c_.cols() - 1);
  for (Eigen::Index j = 1; j < c_.cols(); ++j) d.col(j - 1) = double(j) * c_.col(j);
  return BiPoly(std::move(d));
}

RPoly BiPoly::in_x2(double x1) const {
  RPoly::Coeffs a(c_.cols());
  for (Eigen::Index j = 0; j < c_.cols(); ++j) {
    double acc = 0.0;
    for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) acc = acc * x1 + c_(i, j);
    a(j) = acc;
  }
  return RPoly(std::move(a));
}

BiPoly BiPoly::swapped() const { return BiPoly(Eigen::MatrixXd(c_.transpose())); }

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(std::max(a.c_.rows(), b.c_.rows()), std::max(a.c_.cols(), b.c_.cols()));
  c.topLeftCorner(a.c_.rows(), a.c_.cols()) += a.c_;
  c.topLeftCorner(b.c_.rows(), b.c_.cols()) += b.c_;
  return BiPoly(std::move(c));
}

BiPoly operator*(double s, const BiPoly& a) { return BiPoly(Eigen::MatrixXd(s * a.c_)); }
BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-1.0) * b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(a.c_.rows() + b.c_.rows() - 1, a.c_.cols() + b.c_.cols() - 1);
  for (Eigen::Index i = 0; i < a.c_.rows(); ++i)
    for (Eigen::Index j = 0; j < a.c_.cols(); ++j)
      if (a.c_(i, j) != 0.0) c.block(i, j, b.c_.rows(), b.c_.cols()) += a.c_(i, j) * b.c_;
  return BiPoly(std::move(c));
}

BiPoly pow(const BiPoly& p, int k) {
  BiPoly out = BiPoly::constant(1.0);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

double sylvester_determinant(const RPoly::Coeffs& a, const RPoly::Coeffs& b) {
  const Eigen::Index m = a.size() - 1;
  const Eigen::Index k = b.size() - 1;
  const Eigen::Index n = m + k;
  if (n == 0) return 1.0;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index j = 0; j <= m; ++j) S(r, r + j) = a(m - j);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index j = 0; j <= k; ++j) S(k + r, r + j) = b(k - j);
  return Eigen::FullPivLU<Eigen::MatrixXd>(S).determinant();
}

RPoly resultant_x2(const BiPoly& f, const BiPoly& g, double node_radius, int max_degree) {
  const int mf = f.degree_x2();
  const int mg = g.degree_x2();
  if (mf < 1 || mg < 1) throw Error(ErrorCode::InvalidArgument, "resultant_x2 needs positive x2-degree");
  if (!(node_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "node_radius must be positive");
  const int sylvester_bound = f.degree_x1() * mg + g.degree_x1() * mf;
  const int D = std::min(sylvester_bound, f.total_degree() * g.total_degree());
  if (D > max_degree) throw Error(ErrorCode::DegreeOverflow, "resultant degree bound " + std::to_string(D));

  auto sample = [&](double x1) {
    RPoly::Coeffs a = RPoly::Coeffs::Zero(mf + 1);
    RPoly::Coeffs b = RPoly::Coeffs::Zero(mg + 1);
    const RPoly pa = f.in_x2(x1), pb = g.in_x2(x1);
    a.head(pa.coeffs().size()) = pa.coeffs();
    b.head(pb.coeffs().size()) = pb.coeffs();
    return sylvester_determinant(a, b);
  };
  // Hadamard's bound for the Sylvester determinant, used as the scale below
  // which a sample counts as zero.
  auto hadamard = [&](double x1) {
    const double na = f.in_x2(x1).coeffs().norm(), nb = g.in_x2(x1).coeffs().norm();
    return std::pow(na, mg) * std::pow(nb, mf);
  };
  if (D == 0) {
    const double v = sample(0.0);
    return std::abs(v) <= 1e-11 * hadamard(0.0) ? RPoly() : RPoly::constant(v);
  }

  // Chebyshev interpolation in s = x1 / node_radius.
  const int N = D + 1;
  Eigen::VectorXd nodes(N), values(N);
  double bound = 0.0;
  for (int j = 0; j < N; ++j) {
    nodes(j) = std::cos(std::numbers::pi * (j + 0.5) / N);
    values(j) = sample(node_radius * nodes(j));
    bound = std::max(bound, hadamard(node_radius * nodes(j)));
  }
  if (values.cwiseAbs().maxCoeff() <= 1e-11 * bound) return RPoly();
  Eigen::VectorXd cheb = Eigen::VectorXd::Zero(N);
  for (int k = 0; k < N; ++k) {
    double acc = 0.0;
    for (int j = 0; j < N; ++j) acc += values(j) * std::cos(std::numbers::pi * k * (j + 0.5) / N);
    cheb(k) = (k == 0 ? 1.0 : 2.0) * acc / N;
  }
  const double top = cheb.cwiseAbs().maxCoeff();
  if (top == 0.0) return RPoly();
  int last = N - 1;
  while (last > 0 && std::abs(cheb(last)) <= 1e-11 * top) --last;

  // Monomial form via T_{k+1} = 2 s T_k - T_{k-1}.
  Eigen::VectorXd mono = Eigen::VectorXd::Zero(last + 1);
  Eigen::VectorXd t_prev = Eigen::VectorXd::Zero(last + 1), t_cur = Eigen::VectorXd::Zero(last + 1);
  t_prev(0) = 1.0;
  mono += cheb(0) * t_prev;
  if (last >= 1) {
    t_cur(1) = 1.0;
    mono += cheb(1) * t_cur;
  }
  for (int k = 2; k <= last; ++k) {
    Eigen::VectorXd t_next = -t_prev;
    for (int i = 0; i < last; ++i) t_next(i + 1) += 2.0 * t_cur(i);
    mono += cheb(k) * t_next;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return RPoly(std::move(mono)).rescaled(1.0 / node_radius);
}

std::vector<std::complex<double>> complex_roots(const RPoly& p) {
  const RPoly q = p.trimmed();
  if (q.degree() < 1) return {};
  if (q.degree() == 1) return {std::complex<double>(-q.coeff(0) / q.coeff(1), 0.0)};
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(q.coeffs());
  const auto& r = solver.roots();
  return {r.data(), r.data() + r.size()};
}

std::vector<double> real_root_candidates(const RPoly& p, double imag_slack) {
  std::vector<double> out;
  const RPoly q = p.trimmed();
  if (q.degree() < 1) return out;
  try {
    out = real_roots(q);
  } catch (const Error&) {
    // Sturm isolation gave up; the eigenvalue candidates below still cover it.
  }
  for (const auto& z : complex_roots(q))
    if (std::abs(z.imag()) <= imag_slack * (1.0 + std::abs(z.real()))) out.push_back(z.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hdcrit
