#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/json_io.hpp"
#include "semicomm/matrix.hpp"

namespace semicomm {

enum class Outcome { Holds, NotApplicable, Violated };

const char* to_string(Outcome o);

/// One predicate evaluation. `details` carries named diagnostics (dimensions,
/// bounds, sign classes, violating coordinates); a Violated report always
/// contains at least one witness entry.
struct TheoremReport {
  std::string theorem_id;
  std::string instance_digest;
  Outcome outcome = Outcome::NotApplicable;
  std::vector<std::pair<std::string, std::string>> details;
};

/// Input carrier for a predicate: named matrices plus named integer
/// parameters (e.g. {"m": 4, "n": 6} for the intertwiner-space check).
struct Instance {
  std::map<std::string, QMatrix> mats;
  std::map<std::string, long> params;

  json to_json() const;
  static Instance from_json(const json& j);
  std::string digest() const;
};

/// All predicate identifiers, in canonical report order.
const std::vector<std::string>& theorem_ids();

bool is_theorem_id(const std::string& id);

/// Evaluates one predicate on one instance. Hypotheses are checked exactly
/// first; an instance that misses them yields NotApplicable, never Violated.
TheoremReport check(const std::string& theorem_id, const Instance& instance);

struct SuiteRow {
  std::string theorem_id;
  long holds = 0;
  long not_applicable = 0;
  long violated = 0;
};

struct SuiteResult {
  std::vector<SuiteRow> rows;                // one per predicate, canonical order
  std::vector<TheoremReport> violations;     // full reports, canonical order
  long total_instances = 0;

  long total_violated() const;
  json to_json() const;
};

/// For every predicate: constructed witnesses plus `trials_per_case` seeded
/// random instances per size n <= n_max from the matching generator family.
/// Deterministic in seed; trials may run on `jobs` threads without changing
/// the merged result. `only` restricts to a single predicate.
SuiteResult run_suite(Index n_max, long trials_per_case, std::uint64_t seed, int jobs = 1,
                      const std::optional<std::string>& only = std::nullopt);

/// The seeded instance generator the suite uses (exposed for tests).
Instance random_instance(const std::string& theorem_id, Index n, long trial,
                         std::uint64_t seed);

/// Deterministic constructed witnesses per predicate (exposed for tests).
std::vector<Instance> constructed_witnesses(const std::string& theorem_id, Index n_max);

}  // namespace semicomm
