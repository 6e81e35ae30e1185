#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicomm/matrix.hpp"
#include "semicomm/rref.hpp"

namespace semicomm {

/// A word over generator indices; the empty word evaluates to the identity.
using Word = std::vector<int>;

/// Readable label: "1" for the empty word, otherwise letters A, B, C, ...
/// per generator index.
std::string word_label(const Word& w);

QMatrix evaluate_word(const Word& w, const std::vector<QMatrix>& generators, Index n);

/// Basis of the unital algebra generated by a matrix tuple, as produced by
/// the breadth-first right-multiplication closure. basis_matrices are the
/// admitted word values (linearly independent, identity first); rref_span is
/// the canonical dim x n^2 RREF of their vectorizations.
struct AlgebraBasis {
  Index n = 0;
  Index dim = 0;
  std::vector<Word> basis_words;
  std::vector<QMatrix> basis_matrices;
  QMatrix rref_span;

  bool contains(const QMatrix& m) const;
};

/// Breadth-first word closure seeded with the identity: each admitted basis
/// element is multiplied on the right by each generator and the product is
/// admitted iff it enlarges the span. Words are admitted shortest-first, ties
/// broken by generator index, so the basis labels are reproducible. After
/// closure, left-multiplication closure is asserted as a cross-check.
AlgebraBasis unital_algebra_basis(const std::vector<QMatrix>& generators);

/// Dimensions of the spans of {I} together with all words in e, f of length
/// up to 1, 2, ..., max_len; entry 0 is the dimension of span{I} = 1.
/// Exponential in max_len for generic inputs (word values are deduplicated
/// level by level, which collapses heavily for idempotents).
std::vector<Index> word_span_dims(const QMatrix& e, const QMatrix& f, Index max_len);

/// Checks the span identity between the commutator-ladder filtration
/// G_n = span( union_{j<=n} [e,f]^j {I,e,f,ef} ) and
/// span( V_{2n+1} union {[e,f]^n ef} ). Inputs must be idempotent.
bool verify_lemma_gn(const QMatrix& e, const QMatrix& f, Index n);

/// Simultaneous triangularizability over the complex numbers, decided
/// exactly: w (ab-ba) must be nilpotent for every basis element w of the
/// generated unital algebra. 200 seeded random linear combinations of basis
/// elements are tested as a safeguard against implementation faults; a
/// combination failing while all basis words pass throws std::logic_error.
bool mccoy_triangularizable(const QMatrix& a, const QMatrix& b);

/// Smallest k <= n with (ab-ba)^k = 0, or nullopt if the commutator is not
/// nilpotent.
std::optional<Index> commutator_nil_index(const QMatrix& a, const QMatrix& b);

/// Exact evaluation of the basic product relations for a pair (e, f) where
/// e is idempotent (f need not be).
struct IdempotentRelations {
  bool efe_eq_fe = false;
  bool fef_eq_ef = false;
  bool fe_idempotent = false;
  bool ef_idempotent = false;
  bool comm_square_zero = false;
  bool commuting = false;
};

IdempotentRelations check_idempotent_relations(const QMatrix& e, const QMatrix& f);

}  // namespace semicomm
