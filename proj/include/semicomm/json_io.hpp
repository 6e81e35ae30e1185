#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "semicomm/matrix.hpp"

namespace semicomm {

using json = nlohmann::json;

/// Matrix wire format:
///   {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}
/// Entries are strings, either integer literals or "p/q" in lowest terms with
/// the sign on the numerator.
json matrix_to_json(const QMatrix& m);

/// Parses the wire format; `where` names the object in error messages
/// (e.g. "A"). Throws std::invalid_argument with the offending entry index.
QMatrix matrix_from_json(const json& j, const std::string& where);

struct MatrixPair {
  QMatrix a;
  QMatrix b;
};

/// Pair wire format: {"A": <Matrix>, "B": <Matrix>}.
json pair_to_json(const MatrixPair& p);
MatrixPair pair_from_json(const json& j);

/// Reads and parses a JSON file; error messages carry the file path.
json load_json_file(const std::string& path);

/// FNV-1a 64-bit over a string, rendered as 16 hex digits. Stable across
/// platforms; used for instance digests and witness dedup keys.
std::string fnv1a_hex(const std::string& data);

}  // namespace semicomm
