#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "semicomm/algebra.hpp"
#include "semicomm/constructions.hpp"
#include "semicomm/order.hpp"
#include "semicomm/rng.hpp"
#include "semicomm/rref.hpp"

using namespace semicomm;

TEST_CASE("jordan, cycle, companion shapes") {
  CHECK(exactly_equal(cycle(1), make_matrix({{1}})));
  CHECK(exactly_equal(jordan_block(1), make_matrix({{0}})));
  const QMatrix c3 = cycle(3);
  QMatrix e2 = zeros(3, 1);
  e2(1, 0) = Rational(1);
  QMatrix e1 = zeros(3, 1);
  e1(0, 0) = Rational(1);
  CHECK(exactly_equal(QMatrix(c3 * e2), e1));  // C e_2 = e_1
  CHECK(is_permutation_matrix(c3));

  CompanionSpec spec;
  spec.coefficients = {Rational(0), Rational(0), Rational(1), Rational(2)};
  CHECK(spec.zero_multiplicity() == 2);
  const QMatrix a = companion(spec);
  CHECK(exactly_equal(a, make_matrix({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 2}})));
  CHECK(as_companion(a).has_value());
  CHECK(as_companion(a)->zero_multiplicity() == 2);
  CHECK_FALSE(as_companion(identity(3)).has_value());

  // All-zero coefficients degenerate to the Jordan block.
  CompanionSpec all_zero;
  all_zero.coefficients.assign(4, Rational(0));
  CHECK(exactly_equal(companion(all_zero), jordan_block(4)));
  CHECK(all_zero.zero_multiplicity() == 4);

  CHECK_THROWS_AS(cycle(0), DomainError);
  CHECK_THROWS_AS(jordan_block(0), DomainError);
}

TEST_CASE("permutation from cycle type") {
  const QMatrix p = permutation_from_cycle_type({2, 3});
  CHECK(is_permutation_matrix(p));
  CHECK(exactly_equal(QMatrix(p.block(0, 0, 2, 2)), cycle(2)));
  CHECK(exactly_equal(QMatrix(p.block(2, 2, 3, 3)), cycle(3)));
  CHECK(is_permutation_matrix(permutation_from_cycle_type({1, 1, 1})));
  CHECK_THROWS_AS(permutation_from_cycle_type({2, 0}), DomainError);
}

TEST_CASE("gerstenhaber witness attains the triangular bound") {
  for (Index n = 1; n <= 6; ++n) {
    const auto [j, b] = gerstenhaber_witness(n);
    CHECK(commutator_sign(j, b) == (n == 1 ? SignClass::Zero : SignClass::Positive));
    CHECK(unital_algebra_basis({j, b}).dim == n * (n + 1) / 2);
  }
}

TEST_CASE("intertwiner basis: count, relation, independence") {
  for (Index m = 1; m <= 8; ++m)
    for (Index n = 1; n <= 8; ++n) {
      const auto basis = intertwiner_basis(m, n);
      const Index d = std::gcd(m, n);
      REQUIRE(static_cast<Index>(basis.size()) == d);
      RowSpan span(m * n);
      for (const QMatrix& u : basis) {
        CHECK(exactly_equal(QMatrix(cycle(m) * u), QMatrix(u * cycle(n))));
        CHECK(verify_intertwiner_structure(u, m, n));
        span.insert(vectorize(u));
      }
      CHECK(span.rank() == d);
    }
}

TEST_CASE("intertwiner special cases") {
  // m = n = 2: the basis spans {I, C_2}.
  const auto basis22 = intertwiner_basis(2, 2);
  RowSpan span(4);
  span.insert(vectorize(identity(2)));
  span.insert(vectorize(cycle(2)));
  for (const QMatrix& u : basis22) CHECK(span.contains(vectorize(u)));

  // m = 1: single all-ones row.
  const auto basis1n = intertwiner_basis(1, 5);
  REQUIRE(basis1n.size() == 1);
  for (Index j = 0; j < 5; ++j) CHECK(basis1n[0](0, j) == Rational(1));

  // (4,6): two generators whose sum is the a/b checkerboard.
  const auto basis46 = intertwiner_basis(4, 6);
  REQUIRE(basis46.size() == 2);
  const QMatrix sum = basis46[0] + basis46[1] * Rational(2);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 6; ++j)
      CHECK(sum(i, j) == ((i + j) % 2 == 0 ? basis46[0](0, 0) + Rational(2) * basis46[1](0, 0)
                                           : basis46[0](0, 1) + Rational(2) * basis46[1](0, 1)));
  CHECK(verify_intertwiner_structure(QMatrix(sum), 4, 6));

  // The all-ones matrix intertwines; a single unit entry does not.
  QMatrix ones = zeros(3, 5);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 5; ++j) ones(i, j) = Rational(1);
  CHECK(verify_intertwiner_structure(ones, 3, 5));
  QMatrix e11 = zeros(3, 5);
  e11(0, 0) = Rational(1);
  CHECK_FALSE(verify_intertwiner_structure(e11, 3, 5));
}

TEST_CASE("stored idempotent pairs match their certificates") {
  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(is_idempotent(p7.e));
  CHECK(is_idempotent(p7.f));
  CHECK(commutator_sign(p7.e, p7.f) == SignClass::Positive);
  CHECK(unital_algebra_basis({p7.e, p7.f}).dim == 9);
  CHECK(commutator_nil_index(p7.e, p7.f) == Index{3});

  const IdempotentPair p3 = idempotent_pair_3x3();
  CHECK(is_idempotent(p3.e));
  CHECK(is_idempotent(p3.f));
  CHECK(commutator_sign(p3.e, p3.f) == SignClass::Positive);
  CHECK(unital_algebra_basis({p3.e, p3.f}).dim == 5);
  CHECK(exactly_equal(commutator(p3.e, p3.f), make_matrix({{0, 1, 1}, {0, 0, 1}, {0, 0, 0}})));
}

TEST_CASE("the 9 spanning products of the 7x7 pair are independent") {
  const IdempotentPair p = idempotent_pair_7x7();
  const QMatrix& e = p.e;
  const QMatrix& f = p.f;
  const QMatrix k = commutator(e, f);
  const std::vector<QMatrix> spanning = {
      identity(7), e, f, e * f, k, k * e, k * f, k * e * f, k * k};
  RowSpan span(49);
  for (const QMatrix& m : spanning) span.insert(vectorize(m));
  CHECK(span.rank() == 9);
}

TEST_CASE("the 5 listed products of the 3x3 pair are independent") {
  const IdempotentPair p = idempotent_pair_3x3();
  const QMatrix k = commutator(p.e, p.f);
  const std::vector<QMatrix> listed = {identity(3), p.e, k, k * p.e, k * k};
  RowSpan span(9);
  for (const QMatrix& m : listed) span.insert(vectorize(m));
  CHECK(span.rank() == 5);
}

TEST_CASE("catalan pair: fixed small instances") {
  const IdempotentPair c2 = catalan_idempotent_pair(2);
  CHECK(exactly_equal(c2.f, make_matrix({{1, 1}, {0, 0}})));
  CHECK(unital_algebra_basis({c2.e, c2.f}).dim == 3);

  const IdempotentPair c3 = catalan_idempotent_pair(3);
  CHECK(exactly_equal(c3.f, make_matrix({{1, 1, -1}, {0, 0, 1}, {0, 0, 1}})));
  CHECK(unital_algebra_basis({c3.e, c3.f}).dim == 5);
}

TEST_CASE("catalan pair: idempotency, commutator pattern, dimension 2n-1") {
  for (Index n = 2; n <= 10; ++n) {
    const IdempotentPair cat = catalan_idempotent_pair(n);
    CHECK(is_idempotent(cat.e));
    CHECK(is_idempotent(cat.f));
    const QMatrix k = commutator(cat.e, cat.f);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        if (j == i + 1)
          CHECK(k(i, j) == (i % 2 == 0 ? Rational(1) : Rational(-1)));
        else
          CHECK(k(i, j).is_zero());
      }
    CHECK(unital_algebra_basis({cat.e, cat.f}).dim == 2 * n - 1);
  }
}

TEST_CASE("catalan numbers") {
  CHECK(catalan_number(0) == Rational(1));
  CHECK(catalan_number(1) == Rational(1));
  CHECK(catalan_number(2) == Rational(2));
  CHECK(catalan_number(3) == Rational(5));
  CHECK(catalan_number(4) == Rational(14));
  CHECK(catalan_number(5) == Rational(42));
}

TEST_CASE("diagonalize_idempotent on the stated examples") {
  // Already diagonal: the change of basis is the identity.
  const QMatrix d = make_matrix({{1, 0}, {0, 0}});
  const auto r0 = diagonalize_idempotent(d, identity(2));
  CHECK(exactly_equal(r0.p, identity(2)));
  CHECK(exactly_equal(r0.e_diag, d));

  // Single elimination step.
  const auto r1 = diagonalize_idempotent(make_matrix({{1, 1}, {0, 0}}), identity(2));
  CHECK(exactly_equal(r1.p, make_matrix({{1, 1}, {0, 1}})));
  CHECK(exactly_equal(r1.e_diag, make_matrix({{1, 0}, {0, 0}})));

  CHECK_THROWS_AS(diagonalize_idempotent(make_matrix({{0, 0}, {1, 0}}), identity(2)),
                  DomainError);
  CHECK_THROWS_AS(diagonalize_idempotent(make_matrix({{1, 1}, {0, 1}}), identity(2)),
                  DomainError);
}

TEST_CASE("diagonalize_idempotent on conjugated catalan pairs") {
  SplitMix64 rng(401);
  const IdempotentPair cat = catalan_idempotent_pair(5);
  const Index before = unital_algebra_basis({cat.e, cat.f}).dim;
  for (int t = 0; t < 5; ++t) {
    const QMatrix s = random_unit_upper_triangular(5, rng);
    const QMatrix si = inverse(s);
    const QMatrix e = s * cat.e * si;
    const QMatrix f = s * cat.f * si;
    const auto res = diagonalize_idempotent(e, f);
    CHECK(is_idempotent(res.e_diag));
    CHECK(is_upper_triangular(res.f_upper));
    CHECK(unital_algebra_basis({res.e_diag, res.f_upper}).dim == before);
  }
}

TEST_CASE("random semi-commuting pairs: guarantees and determinism") {
  SplitMix64 seeds(402);
  for (PairFamily family : all_pair_families()) {
    for (int t = 0; t < 12; ++t) {
      const Index n = static_cast<Index>(1 + (t % 6));
      const std::uint64_t seed = seeds.next();
      const auto [a, b] = random_semicommuting_pair(n, family, seed);
      CHECK(is_positive_matrix(a));
      CHECK(is_positive_matrix(b));
      const SignClass cs = commutator_sign(a, b);
      CHECK((cs == SignClass::Positive || cs == SignClass::Zero));
      const auto [a2, b2] = random_semicommuting_pair(n, family, seed);
      CHECK(exactly_equal(a, a2));
      CHECK(exactly_equal(b, b2));
      if (family == PairFamily::RankOneIdempotents) {
        CHECK(is_idempotent(a));
        CHECK(is_idempotent(b));
      }
      if (family == PairFamily::CommutingPoly) CHECK(cs == SignClass::Zero);
    }
  }
}

TEST_CASE("positive semicommuting idempotent generator keeps its contract") {
  SplitMix64 rng(403);
  for (int t = 0; t < 40; ++t) {
    const Index n = static_cast<Index>(rng.range(1, 6));
    const IdempotentPair pair = random_positive_semicommuting_idempotents(n, rng);
    CHECK(is_idempotent(pair.e));
    CHECK(is_idempotent(pair.f));
    CHECK(is_positive_matrix(pair.e));
    CHECK(is_positive_matrix(pair.f));
    const SignClass cs = commutator_sign(pair.e, pair.f);
    CHECK((cs == SignClass::Positive || cs == SignClass::Zero));
    CHECK(is_positive_matrix(QMatrix(pair.f * pair.e)));
  }
}
