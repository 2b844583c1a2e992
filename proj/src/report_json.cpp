#include "hdcrit/report_json.hpp"

#include <charconv>
#include <sstream>

namespace hdcrit {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) parse_fail(std::string("family needs integer '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

SliceFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) parse_fail("family JSON needs a 'family' string");
  const std::string name = j["family"].get<std::string>();
  SliceFamily out;
  if (name == "detmag") {
    out = DetMagOne{};
  } else if (name == "parabola") {
    out = ParabolaPair{};
  } else if (name == "fermat") {
    out = FermatSphere{j.contains("n") ? get_int(j, "n") : 2, get_int(j, "d")};
  } else if (name == "rank") {
    out = RankAtMost{get_int(j, "n"), get_int(j, "r")};
  } else if (name == "allones") {
    out = AllOnes{get_int(j, "n")};
  } else if (name == "axes") {
    out = AxisUnion{get_int(j, "n")};
  } else if (name == "curve") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) parse_fail("curve needs 'coeffs'");
    const json& c = j["coeffs"];
    std::size_t cols = 0;
    for (const auto& row : c) {
      if (!row.is_array()) parse_fail("curve coeffs must be a matrix");
      cols = std::max(cols, row.size());
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(Eigen::Index(c.size()), Eigen::Index(std::max<std::size_t>(cols, 1)));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t k = 0; k < c[i].size(); ++k) {
        if (!c[i][k].is_number()) parse_fail("curve coeffs must be numbers");
        m(Eigen::Index(i), Eigen::Index(k)) = c[i][k].get<double>();
      }
    out = PlaneCurve{BiPoly(std::move(m))};
  } else {
    parse_fail("unknown family '" + name + "'");
  }
  try {
    validate(out);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  return out;
}

json family_to_json(const SliceFamily& family) {
  json j{{"family", family_name(family)}};
  if (const auto* s = std::get_if<RankAtMost>(&family)) {
    j["n"] = s->n;
    j["r"] = s->r;
  } else if (const auto* s = std::get_if<AllOnes>(&family)) {
    j["n"] = s->n;
  } else if (const auto* s = std::get_if<AxisUnion>(&family)) {
    j["n"] = s->n;
  } else if (const auto* s = std::get_if<FermatSphere>(&family)) {
    j["n"] = s->n;
    j["d"] = s->d;
  } else if (const auto* s = std::get_if<PlaneCurve>(&family)) {
    const auto& c = s->f.coeffs();
    json rows = json::array();
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < c.cols(); ++k) row.push_back(c(i, k));
      rows.push_back(std::move(row));
    }
    j["coeffs"] = std::move(rows);
  }
  return j;
}

RVec parse_vector(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) parse_fail("empty entry in vector '" + text + "'");
    const std::string tok = item.substr(b, e - b + 1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v))
      parse_fail("bad number '" + tok + "' in vector");
    vals.push_back(v);
  }
  if (vals.empty()) parse_fail("empty vector");
  return Eigen::Map<RVec>(vals.data(), Eigen::Index(vals.size()));
}

json vector_to_json(const RVec& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json svd_to_json(const SvdFactors& f, const SvdCheck& check) {
  return json{{"U", matrix_to_json(f.U)},
              {"sigma", vector_to_json(f.sigma)},
              {"V", matrix_to_json(f.V)},
              {"residual",
               {{"u_orthonormality", check.u_orthonormality},
                {"v_orthonormality", check.v_orthonormality},
                {"reconstruction", check.reconstruction},
                {"descending", check.descending}}}};
}

json ed_set_to_json(const EdCriticalSet& set, const GenericityReport& gen) {
  json pts = json::array();
  for (std::size_t i = 0; i < set.points.size(); ++i) {
    json p{{"x", vector_to_json(set.points[i])}, {"residual", set.residuals[i]}};
    if (set.branches[i] >= 0) p["branch"] = set.branches[i];
    if (set.at_singular[i]) p["at_singular"] = true;
    pts.push_back(std::move(p));
  }
  json diag = json::object();
  for (const auto& [k, v] : gen.diagnostics) diag[k] = v;
  return json{{"count", set.points.size()},
              {"points", std::move(pts)},
              {"genericity", {{"slice_ok", gen.slice_ok}, {"lift_ok", gen.lift_ok}, {"diagnostics", diag},
                              {"reasons", gen.reasons}}}};
}

json hd_point_to_json(const HdCriticalPoint& p) {
  json j{{"x", vector_to_json(p.source_x)},
         {"X", matrix_to_json(p.X)},
         {"distance_sq", p.distance_sq},
         {"residual", p.residual}};
  if (p.close_spectrum) j["close_spectrum"] = true;
  return j;
}

json hd_poly_to_json(const HdPoly& p) {
  const auto& c = p.coeffs_t2.coeffs();
  return json{{"coeffs_t2", std::vector<double>(c.data(), c.data() + c.size())}};
}

json suite_to_json(const SuiteReport& r) {
  return json{{"suite", r.name},
              {"pass", r.pass()},
              {"trials", r.trials},
              {"failures", r.failures},
              {"worst_residual", r.worst},
              {"notes", r.notes}};
}

}  // namespace hdcrit
