#include "hdcrit/matrix_json.hpp"

#include <fstream>
#include <sstream>

namespace hdcrit {

json matrix_to_json(const CMat& A) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(json::array({A(i, j).real(), A(i, j).imag()}));
    entries.push_back(std::move(row));
  }
  return json{{"rows", A.rows()}, {"cols", A.cols()}, {"entries", std::move(entries)}};
}

CMat matrix_from_json(const json& j) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::ParseError, msg); };
  if (!j.is_object()) fail("matrix must be a JSON object");
  for (const char* key : {"rows", "cols", "entries"})
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) fail("rows/cols must be integers");
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows < 1 || cols < 1) fail("rows and cols must be positive");
  const json& e = j["entries"];
  if (!e.is_array() || static_cast<long long>(e.size()) != rows) fail("entries must hold 'rows' rows");
  CMat A(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    const json& row = e[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long long>(row.size()) != cols)
      fail("row " + std::to_string(r) + " must hold 'cols' entries");
    for (long long c = 0; c < cols; ++c) {
      const json& z = row[static_cast<std::size_t>(c)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        fail("entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
      A(r, c) = cplx(z[0].get<double>(), z[1].get<double>());
    }
  }
  if (!A.allFinite()) fail("entries must be finite");
  return A;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(err.byte > 0 ? err.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + err.what());
  }
}

CMat read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return matrix_from_json(parse_json_text(ss.str()));
}

}  // namespace hdcrit
