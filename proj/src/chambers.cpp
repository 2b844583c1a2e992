#include "hdcrit/chambers.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

namespace hdcrit {

std::pair<double, double> detmag_discriminants(const RVec& y) {
  if (y.size() != 2) throw Error(ErrorCode::ShapeMismatch, "detmag needs y in R^2");
  const double a = y(0), b = y(1);
  const double p = a * b;
  const double common = -256.0 + 6.0 * p * p - 27.0 * a * a * a * a - 27.0 * b * b * b * b;
  const double odd = 192.0 * p + 4.0 * p * p * p;
  return {common + odd, common - odd};
}

int detmag_predicted_count(const RVec& y, double eps) {
  const auto [dp, dm] = detmag_discriminants(y);
  if (std::abs(dp) <= eps || std::abs(dm) <= eps) throw Error(ErrorCode::OnDiscriminant, "y is on D+ D- = 0");
  return dp > 0.0 || dm > 0.0 ? 6 : 4;
}

std::pair<double, double> parabola_evolute_margin(const RVec& y) {
  if (y.size() != 2) throw Error(ErrorCode::ShapeMismatch, "parabola needs y in R^2");
  auto margin = [](double u, double v) { return 16.0 * std::pow(v - 0.5, 3) - 27.0 * u * u; };
  return {margin(y(0), y(1)), margin(y(1), y(0))};
}

int parabola_predicted_count(const RVec& y, double eps) {
  const auto [m1, m2] = parabola_evolute_margin(y);
  if (std::abs(m1) <= eps || std::abs(m2) <= eps) throw Error(ErrorCode::OnDiscriminant, "y is on an evolute");
  return 2 + 2 * (m1 > 0.0) + 2 * (m2 > 0.0);
}

std::vector<RVec> Grid::points() const {
  if (!(step > 0.0) || x_max < x_min || y_max < y_min)
    throw Error(ErrorCode::InvalidArgument, "grid needs step > 0 and ordered ranges");
  const long nx = std::lround(std::floor((x_max - x_min) / step + 1e-9)) + 1;
  const long ny = std::lround(std::floor((y_max - y_min) / step + 1e-9)) + 1;
  std::vector<RVec> out;
  out.reserve(static_cast<std::size_t>(nx * ny));
  for (long i = 0; i < nx; ++i)
    for (long j = 0; j < ny; ++j) {
      RVec y(2);
      y << x_min + double(i) * step, y_min + double(j) * step;
      out.push_back(std::move(y));
    }
  return out;
}

ChamberReport classify_point(const SliceFamily& family, const RVec& y, const Tolerances& tol) {
  ChamberReport rep;
  rep.y = y;
  if (std::holds_alternative<DetMagOne>(family)) {
    const auto [dp, dm] = detmag_discriminants(y);
    rep.invariants["Dplus"] = dp;
    rep.invariants["Dminus"] = dm;
    if (std::abs(dp) <= tol.chamber_skip || std::abs(dm) <= tol.chamber_skip) {
      rep.skipped_reason = "near D+ D- = 0";
      return rep;
    }
    rep.predicted = detmag_predicted_count(y, tol.chamber_skip);
  } else if (std::holds_alternative<ParabolaPair>(family)) {
    const auto [m1, m2] = parabola_evolute_margin(y);
    rep.invariants["m1"] = m1;
    rep.invariants["m2"] = m2;
    if (std::abs(m1) <= tol.chamber_skip || std::abs(m2) <= tol.chamber_skip) {
      rep.skipped_reason = "near an evolute";
      return rep;
    }
    rep.predicted = parabola_predicted_count(y, tol.chamber_skip);
  } else if (const auto* f = std::get_if<FermatSphere>(&family); f && f->n == 2) {
    if (f->d == 2) rep.predicted = 2;
  } else {
    throw Error(ErrorCode::InvalidArgument, "chamber scans support detmag, parabola and fermat with n = 2");
  }

  const GenericityReport gen = genericity_check(family, y, tol.genericity_eps);
  if (!gen.slice_ok) {
    rep.skipped_reason = gen.reasons.empty() ? "non-generic" : gen.reasons.back();
    rep.predicted.reset();
    return rep;
  }
  try {
    rep.observed = static_cast<int>(ed_critical(family, y, tol).points.size());
  } catch (const Error& e) {
    rep.skipped_reason = e.what();
    rep.predicted.reset();
    return rep;
  }
  rep.agree = rep.predicted.has_value() && *rep.predicted == rep.observed;
  return rep;
}

std::vector<ChamberReport> chamber_scan(const SliceFamily& family, const Grid& grid, int threads,
                                        const Tolerances& tol) {
  validate(family);
  const std::vector<RVec> pts = grid.points();
  std::vector<ChamberReport> out(pts.size());
  unsigned workers = threads > 0 ? unsigned(threads) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(std::max<std::size_t>(1, pts.size())));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) out[i] = classify_point(family, pts[i], tol);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void write_chamber_csv(std::ostream& os, const std::vector<ChamberReport>& reports) {
  os << "y1,y2,Dplus,Dminus,m1,m2,predicted,observed,agree,skipped_reason\n";
  for (const auto& r : reports) {
    os << fmt(r.y(0)) << ',' << fmt(r.y(1));
    for (const char* key : {"Dplus", "Dminus", "m1", "m2"}) {
      os << ',';
      if (auto it = r.invariants.find(key); it != r.invariants.end()) os << fmt(it->second);
    }
    os << ',';
    if (r.predicted) os << *r.predicted;
    os << ',';
    if (!r.skipped()) os << r.observed;
    os << ',';
    if (r.predicted && !r.skipped()) os << (r.agree ? "true" : "false");
    os << ',' << csv_field(r.skipped_reason) << '\n';
  }
}

}  // namespace hdcrit
