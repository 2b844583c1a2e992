#pragma once

#include <string>

#include "hdcrit/cxmat.hpp"
#include "hdcrit/lift.hpp"
#include "hdcrit/matrix_json.hpp"
#include "hdcrit/slices.hpp"
#include "hdcrit/verify.hpp"

namespace hdcrit {

// {"family": "detmag" | "parabola" | "fermat" (n, d) | "rank" (n, r) |
//  "allones" (n) | "axes" (n) | "curve" (coeffs[i][j] of x1^i x2^j)}
SliceFamily family_from_json(const json& j);
json family_to_json(const SliceFamily& family);

// "1.5,-2,3e-1" -> vector; throws ParseError.
RVec parse_vector(const std::string& text);
json vector_to_json(const RVec& v);

json svd_to_json(const SvdFactors& f, const SvdCheck& check);
json ed_set_to_json(const EdCriticalSet& set, const GenericityReport& gen);
json hd_point_to_json(const HdCriticalPoint& p);
json hd_poly_to_json(const HdPoly& p);
json suite_to_json(const SuiteReport& r);

}  // namespace hdcrit
