#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "semicomm/algebra.hpp"
#include "semicomm/constructions.hpp"
#include "semicomm/order.hpp"
#include "semicomm/rng.hpp"

using namespace semicomm;

namespace {

QMatrix diag_1_to_n(Index n) {
  QMatrix d = zeros(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = Rational(static_cast<long>(i) + 1);
  return d;
}

}  // namespace

TEST_CASE("closure on the stated examples") {
  CHECK(unital_algebra_basis({}).dim == 1);
  for (Index n = 1; n <= 6; ++n) CHECK(unital_algebra_basis({cycle(n)}).dim == n);
  CHECK(unital_algebra_basis({jordan_block(3), diag_1_to_n(3)}).dim == 6);
  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(unital_algebra_basis({p7.e, p7.f}).dim == 9);
}

TEST_CASE("closure emits shortest words first and contains the identity") {
  const AlgebraBasis basis = unital_algebra_basis({cycle(3)});
  REQUIRE(basis.basis_words.size() == 3);
  CHECK(word_label(basis.basis_words[0]) == "1");
  CHECK(word_label(basis.basis_words[1]) == "A");
  CHECK(word_label(basis.basis_words[2]) == "AA");
  CHECK(basis.contains(identity(3)));
  for (std::size_t i = 0; i + 1 < basis.basis_words.size(); ++i)
    CHECK(basis.basis_words[i].size() <= basis.basis_words[i + 1].size());
}

TEST_CASE("closure saturation: products of basis elements stay inside") {
  SplitMix64 rng(301);
  for (int t = 0; t < 30; ++t) {
    const Index n = static_cast<Index>(rng.range(1, 4));
    const QMatrix a = random_positive_matrix(n, rng, 50, 2);
    const QMatrix b = random_positive_matrix(n, rng, 50, 2);
    const AlgebraBasis basis = unital_algebra_basis({a, b});
    CHECK(basis.dim <= n * n);
    for (const QMatrix& w : basis.basis_matrices) {
      CHECK(basis.contains(QMatrix(w * a)));
      CHECK(basis.contains(QMatrix(a * w)));
      CHECK(basis.contains(QMatrix(w * b)));
      CHECK(basis.contains(QMatrix(b * w)));
    }
  }
}

TEST_CASE("dimension is generator-order and permutation-similarity invariant") {
  SplitMix64 rng(302);
  for (int t = 0; t < 25; ++t) {
    const Index n = static_cast<Index>(rng.range(2, 5));
    const QMatrix a = random_positive_matrix(n, rng, 55, 2);
    const QMatrix b = random_positive_matrix(n, rng, 55, 2);
    const Index dim = unital_algebra_basis({a, b}).dim;
    CHECK(unital_algebra_basis({b, a}).dim == dim);
    const QMatrix p = random_permutation(n, rng);
    CHECK(unital_algebra_basis({QMatrix(p.transpose() * a * p),
                                QMatrix(p.transpose() * b * p)}).dim == dim);
  }
}

TEST_CASE("semi-commuting positive pairs respect the triangular bound") {
  SplitMix64 rng(303);
  for (int t = 0; t < 40; ++t) {
    const Index n = static_cast<Index>(rng.range(1, 6));
    const auto family = all_pair_families()[static_cast<std::size_t>(t) % 4];
    const auto [a, b] = random_semicommuting_pair(n, family, rng.next());
    const Index dim = unital_algebra_basis({a, b}).dim;
    CHECK(dim <= n * (n + 1) / 2);
  }
}

TEST_CASE("commuting polynomial pairs respect the commutative bound") {
  SplitMix64 rng(304);
  for (int t = 0; t < 40; ++t) {
    const Index n = static_cast<Index>(rng.range(1, 7));
    const auto [a, b] = random_semicommuting_pair(n, PairFamily::CommutingPoly, rng.next());
    CHECK(commutator_sign(a, b) == SignClass::Zero);
    CHECK(unital_algebra_basis({a, b}).dim <= n);
  }
}

TEST_CASE("word_span_dims on the stated examples") {
  // Commuting idempotents stabilize within span{I, e, f, ef}.
  const QMatrix e = make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  const QMatrix f = make_matrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  const auto dims = word_span_dims(e, f, 6);
  CHECK(dims.front() == 1);
  CHECK(dims.back() <= 4);
  CHECK(std::is_sorted(dims.begin(), dims.end()));

  const IdempotentPair p7 = idempotent_pair_7x7();
  const auto dims7 = word_span_dims(p7.e, p7.f, 10);
  CHECK(dims7.back() == 9);

  const auto const_dims = word_span_dims(identity(3), identity(3), 4);
  for (Index d : const_dims) CHECK(d == 1);
}

TEST_CASE("word_span_dims stabilizes exactly at the algebra dimension") {
  SplitMix64 rng(305);
  for (int t = 0; t < 12; ++t) {
    const Index n = static_cast<Index>(rng.range(2, 3));
    const QMatrix a = random_positive_matrix(n, rng, 60, 2);
    const QMatrix b = random_positive_matrix(n, rng, 60, 2);
    const Index dim = unital_algebra_basis({a, b}).dim;
    const auto dims = word_span_dims(a, b, n * n + 1);
    CHECK(std::is_sorted(dims.begin(), dims.end()));
    CHECK(dims.back() == dim);
  }
}

TEST_CASE("commutator-ladder span identity") {
  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(verify_lemma_gn(p7.e, p7.f, 0));
  CHECK(verify_lemma_gn(p7.e, p7.f, 1));
  CHECK(verify_lemma_gn(p7.e, p7.f, 2));
  const IdempotentPair cat = catalan_idempotent_pair(5);
  CHECK(verify_lemma_gn(cat.e, cat.f, 1));
  CHECK(verify_lemma_gn(cat.e, cat.f, 2));
  const IdempotentPair p3 = idempotent_pair_3x3();
  CHECK(verify_lemma_gn(p3.e, p3.f, 1));
  CHECK_THROWS_AS(verify_lemma_gn(jordan_block(2), identity(2), 1), DomainError);
}

TEST_CASE("ladder identity holds for random idempotent pairs") {
  SplitMix64 rng(306);
  for (int t = 0; t < 20; ++t) {
    const Index n = static_cast<Index>(rng.range(2, 5));
    const QMatrix e = random_triangular_idempotent(n, rng);
    const QMatrix f = random_triangular_idempotent(n, rng);
    for (Index depth = 0; depth <= 2; ++depth) CHECK(verify_lemma_gn(e, f, depth));
  }
}

TEST_CASE("mccoy triangularizability") {
  const QMatrix a = make_matrix({{1, 2}, {0, 3}});
  const QMatrix b = make_matrix({{2, 0}, {0, 2}});
  CHECK(mccoy_triangularizable(a, b));  // commuting

  const QMatrix up = make_matrix({{0, 1}, {0, 0}});
  const QMatrix down = make_matrix({{0, 0}, {1, 0}});
  CHECK_FALSE(mccoy_triangularizable(up, down));  // commutator diag(1,-1)

  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(mccoy_triangularizable(p7.e, p7.f));
}

TEST_CASE("commutator nil-index") {
  CHECK(commutator_nil_index(identity(3), diag_1_to_n(3)) == Index{1});
  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(commutator_nil_index(p7.e, p7.f) == Index{3});
  const QMatrix up = make_matrix({{0, 1}, {0, 0}});
  const QMatrix down = make_matrix({{0, 0}, {1, 0}});
  CHECK_FALSE(commutator_nil_index(up, down).has_value());
}

TEST_CASE("idempotent relation report") {
  // Commuting idempotents: everything true.
  const QMatrix e = make_matrix({{1, 0}, {0, 0}});
  const QMatrix f = identity(2);
  const IdempotentRelations rel = check_idempotent_relations(e, f);
  CHECK(rel.efe_eq_fe);
  CHECK(rel.fef_eq_ef);
  CHECK(rel.fe_idempotent);
  CHECK(rel.ef_idempotent);
  CHECK(rel.comm_square_zero);
  CHECK(rel.commuting);

  const IdempotentPair p7 = idempotent_pair_7x7();
  const IdempotentRelations rel7 = check_idempotent_relations(p7.e, p7.f);
  CHECK_FALSE(rel7.efe_eq_fe);         // e is not strictly positive there
  CHECK_FALSE(rel7.comm_square_zero);  // nil-index is 3

  // Strictly positive idempotent vs a positive idempotent with ef >= fe:
  // the product relation and the square-zero commutator are forced.
  const Index n = 3;
  QMatrix ones = zeros(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) ones(i, j) = Rational(1, static_cast<long>(n));
  REQUIRE(is_strictly_positive(ones));
  for (const QMatrix& g : {QMatrix(identity(n)), ones, QMatrix(zeros(n, n))}) {
    REQUIRE(commutator_sign(ones, g) == SignClass::Zero);
    const IdempotentRelations r = check_idempotent_relations(ones, g);
    CHECK(r.efe_eq_fe);
    CHECK(r.comm_square_zero);
  }

  CHECK_THROWS_AS(check_idempotent_relations(jordan_block(2), identity(2)), DomainError);
}

TEST_CASE("idempotent pairs respect the nil-index and parity bounds") {
  SplitMix64 rng(307);
  for (int t = 0; t < 30; ++t) {
    const Index n = static_cast<Index>(rng.range(2, 6));
    const QMatrix e = random_triangular_idempotent(n, rng);
    const QMatrix f = random_triangular_idempotent(n, rng);
    const auto nil = commutator_nil_index(e, f);
    REQUIRE(nil.has_value());  // triangular pair has nilpotent commutator
    const Index dim = unital_algebra_basis({e, f}).dim;
    CHECK(dim <= 4 * *nil);
    CHECK(dim <= (n % 2 == 0 ? 2 * n : 2 * n - 1));
  }
}
