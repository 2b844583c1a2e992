#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hdcrit/config.hpp"
#include "hdcrit/cxmat.hpp"
#include "hdcrit/slices.hpp"

namespace hdcrit {

struct ChamberReport {
  RVec y;
  std::map<std::string, double> invariants;  // Dplus, Dminus, m1, m2 where they apply
  std::optional<int> predicted;              // empty means "unknown"
  int observed = -1;
  bool agree = false;
  std::string skipped_reason;  // non-empty when the point was not classified

  bool skipped() const { return !skipped_reason.empty(); }
};

// Discriminants of t^4 - y1 t^3 +- y2 t - 1, the two branches of |x1 x2| = 1.
std::pair<double, double> detmag_discriminants(const RVec& y);

// 6 if D+ > 0 or D- > 0, else 4. Throws OnDiscriminant when |D+-| <= eps.
int detmag_predicted_count(const RVec& y, double eps = default_tolerances().chamber_skip);

// m1 = 16 (y2 - 1/2)^3 - 27 y1^2 is positive inside the evolute of x2 = x1^2;
// m2 is the mirror image.
std::pair<double, double> parabola_evolute_margin(const RVec& y);

// 2 + 2 #{i : m_i > 0}. Throws OnDiscriminant when |m_i| <= eps.
int parabola_predicted_count(const RVec& y, double eps = default_tolerances().chamber_skip);

struct Grid {
  double x_min = 0, x_max = 0;
  double y_min = 0, y_max = 0;
  double step = 1;

  // Points x_min + i step up to x_max (inclusive up to rounding), x outer.
  std::vector<RVec> points() const;
};

ChamberReport classify_point(const SliceFamily& family, const RVec& y, const Tolerances& tol = default_tolerances());

// One report per grid point, in grid order for any thread count.
// threads = 0 uses the hardware concurrency.
std::vector<ChamberReport> chamber_scan(const SliceFamily& family, const Grid& grid, int threads = 0,
                                        const Tolerances& tol = default_tolerances());

void write_chamber_csv(std::ostream& os, const std::vector<ChamberReport>& reports);

}  // namespace hdcrit
