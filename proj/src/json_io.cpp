#include "hookzeta/json_io.hpp"

#include "hookzeta/error.hpp"

namespace hookzeta {

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (rows == 0 || cols == 0 || entries.size() != rows)
      throw Error(ErrorKind::InvalidInput, "matrix shape does not match entries");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (entries[i].size() != cols)
        throw Error(ErrorKind::InvalidInput, "matrix shape does not match entries");
      for (std::size_t k = 0; k < cols; ++k) {
        const auto& e = entries[i][k];
        // integers are accepted too, strings are what we emit
        const std::string s = e.is_string() ? e.get<std::string>() : e.dump();
        if (m(i, k).set_str(s, 10) != 0)
          throw Error(ErrorKind::InvalidInput, "matrix entry is not an integer: " + s);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed matrix JSON: ") + e.what());
  }
}

}  // namespace hookzeta
