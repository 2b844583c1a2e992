#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hdcrit/cxmat.hpp"

namespace hdcrit {

using json = nlohmann::json;

// {"rows": n, "cols": t, "entries": [[[re, im], ...], ...]} (row-major).
json matrix_to_json(const CMat& A);

// Validates shape, entry arity and finiteness; throws ParseError.
CMat matrix_from_json(const json& j);

// Parses text; ParseError messages carry the line and column of the failure.
json parse_json_text(const std::string& text);

CMat read_matrix_file(const std::filesystem::path& path);

}  // namespace hdcrit
