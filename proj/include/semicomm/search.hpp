#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semicomm/constructions.hpp"
#include "semicomm/json_io.hpp"
#include "semicomm/matrix.hpp"
#include "semicomm/order.hpp"

namespace semicomm {

/// A stored pair certifying that some algebra dimension is attained.
/// Re-evaluating the pair must reproduce `dim` and the certificates exactly.
struct Witness {
  Index n = 0;
  Index dim = 0;
  std::string family;
  std::uint64_t seed = 0;
  long trial_index = 0;
  QMatrix a;
  QMatrix b;
  SignClass comm_sign = SignClass::Zero;
  bool a_idempotent = false;
  bool b_idempotent = false;

  json to_json() const;
  static Witness from_json(const json& j);

  /// Recomputes dim and certificates from the stored pair and compares.
  bool replays() const;
};

/// Canonical key for dedup up to simultaneous permutation similarity:
/// the lexicographically minimal serialization of (P^T a P, P^T b P) over all
/// permutations for n <= 6, a content hash beyond that.
std::string canonical_pair_digest(const QMatrix& a, const QMatrix& b);

struct DimSearchResult {
  Index n = 0;
  long trials = 0;
  std::set<Index> attained;
  std::vector<Witness> witnesses;  // one per attained dimension, first found

  json to_json() const;
};

/// Samples pairs from the given families (trial t uses families[t % size]),
/// keeps the positive semi-commuting ones, and records each distinct algebra
/// dimension with its first witness. Deterministic in seed; trials may be
/// spread over `jobs` threads without changing the result.
DimSearchResult search_dims(Index n, const std::vector<PairFamily>& families, long trials,
                            std::uint64_t seed, int jobs = 1);

struct IdemSearchResult {
  Index n = 0;
  long trials = 0;
  long accepted = 0;  // samples passing ef >= fe >= 0 with both idempotent
  Index max_dim_found = 0;
  std::set<Index> attained;
  std::vector<Witness> witnesses;

  json to_json() const;
};

/// Samples positive idempotent pairs with ef >= fe >= 0 (rejection over the
/// structured idempotent generators) and reports the maximum dimension seen.
/// The output is empirical evidence only; n must be even.
IdemSearchResult search_idempotent_even(Index n, long trials, std::uint64_t seed,
                                        int jobs = 1);

}  // namespace semicomm
