#pragma once

#include <string>
#include <vector>

#include "semicomm/matrix.hpp"

namespace semicomm {

/// Entrywise sign classification. Zero is reported when every entry is 0,
/// Positive when all entries are >= 0 with at least one > 0, Negative
/// symmetrically, Mixed otherwise.
enum class SignClass { Positive, Negative, Zero, Mixed };

const char* to_string(SignClass s);

SignClass sign_class(const QMatrix& m);

/// sign_class(ab - ba); Zero means the matrices commute.
SignClass commutator_sign(const QMatrix& a, const QMatrix& b);

/// All entries >= 0 (i.e. sign class Positive or Zero).
bool is_positive_matrix(const QMatrix& m);

/// Pair semi-commutes: ab - ba is entrywise >= 0 or <= 0.
bool semi_commute(const QMatrix& a, const QMatrix& b);

/// For a positive matrix: true iff the kernel contains no nonzero positive
/// vector, which for positive matrices is equivalent to having no zero
/// column. Throws DomainError on non-positive input.
bool is_strictly_positive(const QMatrix& m);

/// True iff the support digraph (edge i->j when m(i,j) > 0) is strongly
/// connected. Cross-checked internally against entrywise positivity of
/// (I+m)^(n-1); a disagreement would be a defect and throws std::logic_error.
/// Throws DomainError on non-positive input.
bool is_ideal_irreducible(const QMatrix& m);

/// Frobenius-normal-form data of a positive matrix: a permutation p (new
/// index -> original index) and block sizes (n_1,...,n_k) such that the
/// permuted matrix P^T m P is block upper-triangular with ideal-irreducible
/// diagonal blocks. k = 1 iff m is ideal-irreducible.
struct IdealChain {
  std::vector<Index> permutation;   // 0-based; permutation[new] = old
  std::vector<Index> block_sizes;   // sums to n

  Index block_count() const { return static_cast<Index>(block_sizes.size()); }
};

/// Permutation matrix P with column i equal to e_{perm[i]}, so that
/// (P^T m P)(i, j) = m(perm[i], perm[j]).
QMatrix permutation_matrix(const std::vector<Index>& perm);

/// Maximal chain of invariant coordinate ideals, computed from the strongly
/// connected components of the support digraph. Topological ties are broken
/// by the smallest original index, making the output deterministic.
IdealChain invariant_ideal_chain(const QMatrix& m);

/// Every diagonal block of the invariant chain has size 1.
bool is_ideal_triangularizable(const QMatrix& m);

/// n + sum_{i<j} n_i n_j where (n_1,...,n_k) are the chain block sizes of
/// a+b. Always <= n(n+1)/2, with equality iff a+b is ideal-triangularizable.
Index refined_bound(const QMatrix& a, const QMatrix& b);

}  // namespace semicomm
