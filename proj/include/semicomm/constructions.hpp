#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semicomm/matrix.hpp"
#include "semicomm/rng.hpp"

namespace semicomm {

/// Nilpotent upper-shift Jordan block of size n.
QMatrix jordan_block(Index n);

/// Cycle of order n: C e_j = e_{j-1} for j >= 2 and C e_1 = e_n.
QMatrix cycle(Index n);

/// Companion matrix: super-diagonal of ones, bottom row (a_0,...,a_{n-1}).
struct CompanionSpec {
  std::vector<Rational> coefficients;  // a_0 ... a_{n-1}

  /// Number of leading zero coefficients; n when all vanish. Equals the
  /// algebraic multiplicity of zero as an eigenvalue.
  Index zero_multiplicity() const;
};

QMatrix companion(const CompanionSpec& spec);

/// Recognizes the companion shape (used for hypothesis checks); returns the
/// coefficient row if m is a companion matrix.
std::optional<CompanionSpec> as_companion(const QMatrix& m);

/// Block diagonal of cycles C_{n_1},...,C_{n_k}.
QMatrix permutation_from_cycle_type(const std::vector<Index>& sizes);

bool is_permutation_matrix(const QMatrix& m);

/// The pair (J_n, diag(1,...,n)): positive, with positive commutator, whose
/// generated unital algebra has the maximal dimension n(n+1)/2.
std::pair<QMatrix, QMatrix> gerstenhaber_witness(Index n);

/// Basis u_1,...,u_d (d = gcd(m,n)) of the space of m x n matrices X with
/// C_m X = X C_n. u_j places ones along the wrap-around orbit of (1, j);
/// residues are 1-based in {1..m} and {1..n}.
std::vector<QMatrix> intertwiner_basis(Index m, Index n);

/// Wrap-around Toeplitz condition a(i, j-1) = a(i+1, j) with 1-based modular
/// indices; checked both directly and via C_m a = a C_n (the two must agree).
bool verify_intertwiner_structure(const QMatrix& a, Index m, Index n);

struct IdempotentPair {
  QMatrix e;
  QMatrix f;
  std::string provenance;
};

/// The 7x7 positive idempotent pair with positive commutator and algebra
/// dimension 9.
IdempotentPair idempotent_pair_7x7();

/// The 3x3 positive idempotent pair with positive commutator and algebra
/// dimension 5 = 2n-1.
IdempotentPair idempotent_pair_3x3();

/// Triangular idempotent pair attaining dimension 2n-1: e = diag(1,0,1,...),
/// f has the same diagonal, ones on the first super-diagonal and alternating
/// signed Catalan numbers on even super-diagonals. [e,f] is supported on the
/// first super-diagonal with entries (1,-1,1,...).
IdempotentPair catalan_idempotent_pair(Index n);

/// j-th Catalan number, exact.
Rational catalan_number(Index j);

struct IdempotentDiagonalization {
  QMatrix p;        // invertible upper-triangular change of basis
  QMatrix e_diag;   // p e p^{-1}, diagonal with the same 0/1 diagonal as e
  QMatrix f_upper;  // p f p^{-1}, upper-triangular
};

/// Given upper-triangular e (idempotent) and f, produces an upper-triangular
/// similarity making e exactly diagonal while keeping f upper-triangular.
/// Works in rounds: partition by maximal runs of equal diagonal values, kill
/// one block super-diagonal with a unit block upper-triangular conjugation
/// with alternating signs (applied to I-e when the leading run is 0), and let
/// idempotency clear the following super-diagonal.
IdempotentDiagonalization diagonalize_idempotent(const QMatrix& e, const QMatrix& f);

enum class PairFamily { DiagDominated, CommutingPoly, BlockChain, RankOneIdempotents };

const char* to_string(PairFamily f);
std::optional<PairFamily> pair_family_from_string(const std::string& name);
const std::vector<PairFamily>& all_pair_families();

/// Deterministic in (n, family, seed). Both outputs are positive and the
/// commutator ab - ba is entrywise >= 0 (sign class Positive or Zero).
/// RankOneIdempotents retries the sign constraint and throws GenerationError
/// after 10000 attempts.
std::pair<QMatrix, QMatrix> random_semicommuting_pair(Index n, PairFamily family,
                                                      std::uint64_t seed);

// --- seeded instance helpers shared by the verifier and the searches ---

QMatrix random_positive_matrix(Index n, SplitMix64& rng, unsigned density_pct = 60,
                               long max_entry = 3);

QMatrix random_positive_matrix_rect(Index rows, Index cols, SplitMix64& rng,
                                    unsigned density_pct = 60, long max_entry = 3);

/// Positive and ideal-irreducible: a cycle plus a random positive polynomial
/// in it.
QMatrix random_irreducible_positive(Index n, SplitMix64& rng);

/// Nonnegative random combination of intertwiner_basis(m, n).
QMatrix random_intertwiner_combination(Index m, Index n, SplitMix64& rng);

std::vector<Index> random_cycle_type(Index n, SplitMix64& rng);
QMatrix random_permutation(Index n, SplitMix64& rng);
QMatrix random_unit_upper_triangular(Index n, SplitMix64& rng, long max_entry = 2);

/// T D T^{-1} with T unit upper-triangular and D a 0/1 diagonal: a random
/// upper-triangular idempotent.
QMatrix random_triangular_idempotent(Index n, SplitMix64& rng);

/// S D S^{-1} with S = (unit lower) * (unit upper): a random idempotent with
/// no triangularity constraint.
QMatrix random_general_idempotent(Index n, SplitMix64& rng);

/// Positive rank-one idempotent x a^T / (a^T x) with sparse positive x, a.
QMatrix random_rank_one_positive_idempotent(Index n, SplitMix64& rng);

/// Positive idempotent pair with ef - fe entrywise >= 0 (so ef >= fe >= 0),
/// built from rank-one pieces with disjoint supports or permuted copies of
/// the small extremal patterns.
IdempotentPair random_positive_semicommuting_idempotents(Index n, SplitMix64& rng);

}  // namespace semicomm
