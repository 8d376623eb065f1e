#pragma once

// JSON forms shared by the CLI and the Python bindings. Matrix entries are
// decimal strings so consumers never overflow a 64-bit integer:
//   {"rows": r, "cols": c, "entries": [["1","0"],["0","1"]]}

#include <json.hpp>

#include "hookzeta/exactmat.hpp"

namespace hookzeta {

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace hookzeta
