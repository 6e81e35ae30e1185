#include "semicomm/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace semicomm {

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

QMatrix matrix_from_json(const json& j, const std::string& where) {
  const auto fail = [&](const std::string& why) {
    throw std::invalid_argument("matrix \"" + where + "\": " + why);
  };
  if (!j.is_object()) fail("expected an object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    fail("missing rows/cols/entries");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    fail("rows/cols must be integers");
  const Index rows = j["rows"].get<Index>();
  const Index cols = j["cols"].get<Index>();
  if (rows < 1 || cols < 1) fail("rows/cols must be positive");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows)
    fail("entries must be an array of " + std::to_string(rows) + " rows");
  QMatrix m = QMatrix::Zero(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      fail("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (Index jc = 0; jc < cols; ++jc) {
      const json& cell = row[static_cast<std::size_t>(jc)];
      if (!cell.is_string())
        fail("entry (" + std::to_string(i) + "," + std::to_string(jc) + ") must be a string");
      try {
        m(i, jc) = rational_from_string(cell.get<std::string>());
      } catch (const std::invalid_argument& e) {
        fail("entry (" + std::to_string(i) + "," + std::to_string(jc) + "): " + e.what());
      }
    }
  }
  return m;
}

json pair_to_json(const MatrixPair& p) {
  return json{{"A", matrix_to_json(p.a)}, {"B", matrix_to_json(p.b)}};
}

MatrixPair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw std::invalid_argument("pair JSON must be an object with \"A\" and \"B\"");
  return MatrixPair{matrix_from_json(j["A"], "A"), matrix_from_json(j["B"], "B")};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace semicomm
