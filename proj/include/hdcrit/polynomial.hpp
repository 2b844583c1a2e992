#pragma once

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "hdcrit/config.hpp"
#include "hdcrit/error.hpp"

namespace hdcrit {

// Dense univariate polynomial with real coefficients stored in ascending
// degree. Exact trailing zeros are dropped; near-zero leading coefficients are
// kept until `trimmed` is called.
template <typename Scalar>
class Polynomial {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Polynomial() : c_(Coeffs::Zero(1)) {}
  explicit Polynomial(Coeffs c) : c_(std::move(c)) { drop_zeros(); }
  Polynomial(std::initializer_list<Scalar> c) : c_(Coeffs::Map(c.begin(), Eigen::Index(c.size()))) { drop_zeros(); }

  static Polynomial constant(Scalar v) { return Polynomial({v}); }
  static Polynomial monomial(int degree, Scalar v = Scalar(1)) {
    Coeffs c = Coeffs::Zero(degree + 1);
    c(degree) = v;
    return Polynomial(std::move(c));
  }

  const Coeffs& coeffs() const { return c_; }
  Scalar coeff(int i) const { return i < c_.size() ? c_(i) : Scalar(0); }
  int degree() const { return is_zero() ? -1 : int(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_(0) == Scalar(0); }
  Scalar leading() const { return c_(c_.size() - 1); }
  Scalar max_norm() const { return c_.cwiseAbs().maxCoeff(); }

  Scalar operator()(Scalar x) const {
    Scalar acc = c_(c_.size() - 1);
    for (Eigen::Index i = c_.size() - 2; i >= 0; --i) acc = acc * x + c_(i);
    return acc;
  }

  // sum |c_i| |x|^i, the natural magnitude against which p(x) is small.
  Scalar magnitude_at(Scalar x) const {
    using std::abs;
    Scalar acc(0), xp(1);
    for (Eigen::Index i = 0; i < c_.size(); ++i) {
      acc += abs(c_(i)) * xp;
      xp *= abs(x);
    }
    return acc;
  }

  // Drops leading coefficients with |c| <= rel_tol * max-norm.
  Polynomial trimmed(Scalar rel_tol = Scalar(default_tolerances().poly_degeneracy)) const {
    if (is_zero()) return *this;
    using std::abs;
    const Scalar cut = rel_tol * max_norm();
    Eigen::Index n = c_.size();
    while (n > 1 && abs(c_(n - 1)) <= cut) --n;
    return Polynomial(Coeffs(c_.head(n)));
  }

  Polynomial derivative() const {
    if (c_.size() == 1) return Polynomial();
    Coeffs d(c_.size() - 1);
    for (Eigen::Index i = 1; i < c_.size(); ++i) d(i - 1) = Scalar(i) * c_(i);
    return Polynomial(std::move(d));
  }

  Polynomial normalized() const {
    if (is_zero()) return *this;
    return Polynomial(Coeffs(c_ / max_norm()));
  }

  // q(x) = p(s x).
  Polynomial rescaled(Scalar s) const {
    Coeffs d = c_;
    Scalar sp(1);
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      d(i) *= sp;
      sp *= s;
    }
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Coeffs c = Coeffs::Zero(std::max(a.c_.size(), b.c_.size()));
    c.head(a.c_.size()) += a.c_;
    c.head(b.c_.size()) += b.c_;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial(Coeffs(-a.c_)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(Scalar s, const Polynomial& a) { return Polynomial(Coeffs(s * a.c_)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Coeffs c = Coeffs::Zero(a.c_.size() + b.c_.size() - 1);
    for (Eigen::Index i = 0; i < a.c_.size(); ++i) c.segment(i, b.c_.size()) += a.c_(i) * b.c_;
    return Polynomial(std::move(c));
  }

 private:
  void drop_zeros() {
    if (c_.size() == 0) {
      c_ = Coeffs::Zero(1);
      return;
    }
    Eigen::Index n = c_.size();
    while (n > 1 && c_(n - 1) == Scalar(0)) --n;
    c_.conservativeResize(n);
  }

  Coeffs c_;
};

using RPoly = Polynomial<double>;

template <typename Scalar>
struct DivMod {
  Polynomial<Scalar> quotient;
  Polynomial<Scalar> remainder;
};

// Long division; `b` must have a nonzero leading coefficient.
template <typename Scalar>
DivMod<Scalar> divmod(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero polynomial");
  const int na = a.degree();
  const int nb = b.degree();
  if (na < nb) return {Polynomial<Scalar>(), a};
  using Coeffs = typename Polynomial<Scalar>::Coeffs;
  Coeffs r = a.coeffs();
  Coeffs q = Coeffs::Zero(na - nb + 1);
  const Scalar lead = b.leading();
  for (int k = na - nb; k >= 0; --k) {
    const Scalar f = r(k + nb) / lead;
    q(k) = f;
    r.segment(k, nb + 1) -= f * b.coeffs();
    r(k + nb) = Scalar(0);
  }
  Coeffs rem = nb > 0 ? Coeffs(r.head(nb)) : Coeffs::Zero(1);
  return {Polynomial<Scalar>(std::move(q)), Polynomial<Scalar>(std::move(rem))};
}

// 1 + max |c_i / c_n|: every root has smaller modulus.
template <typename Scalar>
Scalar cauchy_bound(const Polynomial<Scalar>& p) {
  using std::abs;
  const auto q = p.trimmed();
  Scalar m(0);
  for (int i = 0; i < q.degree(); ++i) m = std::max(m, abs(q.coeff(i) / q.leading()));
  return Scalar(1) + m;
}

namespace detail {

// Drops negligible leading coefficients of the next chain member r (unit
// max-norm). The chain stays valid on |t| <= B as long as r keeps the sign of
// -a at every zero of b there, so the drop is accepted only if its size on
// that interval is well below min |a| over those zeros.
template <typename Scalar>
Polynomial<Scalar> drop_negligible_leading(const Polynomial<Scalar>& r, const Polynomial<Scalar>& a,
                                           const Polynomial<Scalar>& b, Scalar B) {
  using std::abs;
  const auto& c = r.coeffs();
  Eigen::Index keep = c.size();
  Scalar dropped = 0;
  while (keep > 1) {
    const Scalar next = dropped + abs(c(keep - 1)) * std::pow(B, Scalar(keep - 1));
    if (abs(c(keep - 1)) > Scalar(1e-4) || next > Scalar(1e-4)) break;
    dropped = next;
    --keep;
  }
  if (keep == c.size()) return r;
  Scalar least = std::numeric_limits<Scalar>::infinity();
  if (b.degree() >= 1) {
    Eigen::PolynomialSolver<Scalar, Eigen::Dynamic> solver(b.coeffs());
    for (const auto& z : solver.roots()) {
      if (abs(z.imag()) > Scalar(1e-3) * (1 + abs(z.real())) || abs(z.real()) > B) continue;
      least = std::min(least, abs(a(z.real())));
    }
  }
  if (dropped > Scalar(0.25) * least) return r;
  return Polynomial<Scalar>(typename Polynomial<Scalar>::Coeffs(c.head(keep)));
}

}  // namespace detail

// Sturm sequence p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k), every member
// rescaled to unit max-norm. Remainder coefficients within a small multiple of
// the rounding error of that one division are treated as zero, so the last
// member is a numerical gcd(p, p'). Errors carried in from earlier members are
// shared by consecutive members and cancel, so they are not counted. A member
// whose leading coefficients are negligible on the Cauchy interval is cut back
// (see drop_negligible_leading); the chain is then only meant for |t| <= B.
template <typename Scalar>
std::vector<Polynomial<Scalar>> sturm_sequence(const Polynomial<Scalar>& p) {
  using std::abs;
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Polynomial<Scalar> p0 = p.trimmed().normalized();
  if (p0.is_zero()) throw Error(ErrorCode::InvalidArgument, "Sturm sequence of the zero polynomial");
  std::vector<Polynomial<Scalar>> seq{p0};
  if (p0.degree() == 0) return seq;
  seq.push_back(p0.derivative().normalized());
  const Scalar n = Scalar(p0.degree() + 1);
  const Scalar B = cauchy_bound(p0);
  while (seq.back().degree() > 0) {
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    auto [q, r] = divmod(a, b);
    const Scalar qn = q.max_norm();
    const Scalar bound = n * eps * (a.max_norm() + qn * b.max_norm());
    if (!std::isfinite(double(bound)) || !std::isfinite(double(r.max_norm())))
      throw Error(ErrorCode::IllConditioned, "Sturm remainder overflowed");
    auto c = r.coeffs();
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (abs(c(i)) <= Scalar(64) * bound) c(i) = Scalar(0);
    Polynomial<Scalar> rr(c);
    if (rr.is_zero()) break;
    const Scalar m = rr.max_norm();
    if (m < std::numeric_limits<Scalar>::min()) throw Error(ErrorCode::IllConditioned, "Sturm remainder underflowed");
    seq.push_back(detail::drop_negligible_leading((-rr).normalized(), a, b, B));
    if (int(seq.size()) > p0.degree() + 1) throw Error(ErrorCode::IllConditioned, "Sturm sequence too long");
  }
  return seq;
}

// Sign variations of the sequence at x, skipping exact zeros.
template <typename Scalar>
int sign_variations(const std::vector<Polynomial<Scalar>>& seq, Scalar x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    const Scalar v = s(x);
    const int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

// Number of distinct real roots in (a, b]. Endpoints that are numerically
// roots are nudged right (keeping the half-open convention); if that does not
// help, DegenerateAtEndpoint is thrown.
template <typename Scalar>
int sturm_count(const Polynomial<Scalar>& p, Scalar a, Scalar b) {
  using std::abs;
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "sturm_count needs a < b");
  const auto seq = sturm_sequence(p);
  const Polynomial<Scalar>& p0 = seq.front();
  const Scalar tol = Scalar(default_tolerances().root_refinement);
  auto settle = [&](Scalar x) {
    if (abs(p0(x)) > tol * p0.magnitude_at(x)) return x;
    using std::max;
    const Scalar nudged = x + Scalar(1e-9) * max(Scalar(1), abs(x));
    if (abs(p0(nudged)) <= tol * p0.magnitude_at(nudged))
      throw Error(ErrorCode::DegenerateAtEndpoint, "polynomial vanishes at interval endpoint");
    return nudged;
  };
  // no roots outside the Cauchy interval, and the chain is only valid inside it
  const Scalar B = cauchy_bound(p0);
  const Scalar lo = std::max(settle(a), -B);
  const Scalar hi = std::min(settle(b), B);
  if (!(lo < hi)) return 0;
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

template <typename Scalar>
struct RealRoot {
  Scalar value;
  bool multiple = false;  // root of the numerical gcd(p, p')
};

namespace detail {

template <typename Scalar>
Scalar refine_root(const std::vector<Polynomial<Scalar>>& seq, Scalar lo, Scalar hi) {
  using std::abs;
  const auto& p = seq.front();
  Scalar plo = p(lo), phi = p(hi);
  const bool bracket = (plo < 0 && phi > 0) || (plo > 0 && phi < 0);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const int vlo = bracket ? 0 : sign_variations(seq, lo);
  for (int it = 0; it < 400; ++it) {
    const Scalar mid = lo + (hi - lo) / 2;
    if (hi - lo <= Scalar(4) * eps * std::max(Scalar(1), abs(mid)) || mid <= lo || mid >= hi) break;
    if (bracket) {
      const Scalar pm = p(mid);
      if (pm == Scalar(0)) return mid;
      if ((pm < 0) == (plo < 0)) {
        lo = mid;
        plo = pm;
      } else {
        hi = mid;
      }
    } else {
      if (vlo - sign_variations(seq, mid) >= 1)
        hi = mid;
      else
        lo = mid;
    }
  }
  Scalar x = lo + (hi - lo) / 2;
  const auto dp = p.derivative();
  for (int it = 0; it < 4; ++it) {
    const Scalar d = dp(x);
    if (d == Scalar(0)) break;
    const Scalar nx = x - p(x) / d;
    if (!(nx >= lo && nx <= hi) || abs(p(nx)) >= abs(p(x))) break;
    x = nx;
  }
  return x;
}

template <typename Scalar>
void isolate(const std::vector<Polynomial<Scalar>>& seq, Scalar lo, Scalar hi, int vlo, int vhi,
             std::vector<Scalar>& out, int depth) {
  using std::abs;
  const int count = vlo - vhi;
  if (count <= 0) return;
  const Scalar mid = lo + (hi - lo) / 2;
  const bool tiny = hi - lo <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() * std::max(Scalar(1), abs(mid));
  if (count == 1 || tiny || depth > 200) {
    out.push_back(refine_root(seq, lo, hi));
    return;
  }
  const int vmid = sign_variations(seq, mid);
  isolate(seq, lo, mid, vlo, vmid, out, depth + 1);
  isolate(seq, mid, hi, vmid, vhi, out, depth + 1);
}

}  // namespace detail

// All distinct real roots, ascending, with multiplicity flags. Isolation by
// Sturm bisection over the Cauchy interval, refinement by bisection then Newton.
template <typename Scalar>
std::vector<RealRoot<Scalar>> real_roots_detailed(const Polynomial<Scalar>& p,
                                                  Scalar tol = Scalar(default_tolerances().root_refinement)) {
  using std::abs;
  const auto q = p.trimmed();
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "real_roots of the zero polynomial");
  if (q.degree() == 0) return {};
  const auto seq = sturm_sequence(q);
  const Scalar bound = cauchy_bound(q);
  const Scalar lo = -bound, hi = bound;
  std::vector<Scalar> found;
  detail::isolate(seq, lo, hi, sign_variations(seq, lo), sign_variations(seq, hi), found, 0);
  std::sort(found.begin(), found.end());

  const auto& p0 = seq.front();
  const auto& g = seq.back();
  std::vector<RealRoot<Scalar>> roots;
  roots.reserve(found.size());
  for (Scalar r : found) {
    RealRoot<Scalar> rr{r, false};
    if (g.degree() >= 1) rr.multiple = abs(g(r)) <= Scalar(1e-6) * g.magnitude_at(r);
    const Scalar slack = rr.multiple ? Scalar(1e3) : Scalar(1);
    if (abs(p0(r)) > slack * tol * p0.magnitude_at(r) * Scalar(p0.degree() + 1))
      throw Error(ErrorCode::IllConditioned, "root refinement did not reach the residual target");
    roots.push_back(rr);
  }
  return roots;
}

template <typename Scalar>
std::vector<Scalar> real_roots(const Polynomial<Scalar>& p, Scalar tol = Scalar(default_tolerances().root_refinement)) {
  std::vector<Scalar> v;
  for (const auto& r : real_roots_detailed(p, tol)) v.push_back(r.value);
  return v;
}

// Classical discriminant of a t^4 + b t^3 + c t^2 + d t + e.
template <typename Scalar>
Scalar quartic_discriminant(const Polynomial<Scalar>& p) {
  const auto q = p.trimmed();
  if (q.degree() != 4) throw Error(ErrorCode::WrongDegree, "quartic_discriminant needs degree 4");
  const Scalar a = q.coeff(4), b = q.coeff(3), c = q.coeff(2), d = q.coeff(1), e = q.coeff(0);
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
         b * b * c * c * d * d;
}

}  // namespace hdcrit
