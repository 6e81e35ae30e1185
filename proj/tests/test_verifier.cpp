#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "semicomm/constructions.hpp"
#include "semicomm/order.hpp"
#include "semicomm/rng.hpp"
#include "semicomm/verifier.hpp"

using namespace semicomm;

namespace {

Instance pair_instance(const QMatrix& a, const QMatrix& b, const char* ka = "A",
                       const char* kb = "B") {
  Instance inst;
  inst.mats[ka] = a;
  inst.mats[kb] = b;
  return inst;
}

std::string detail(const TheoremReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details)
    if (k == key) return v;
  return "";
}

}  // namespace

TEST_CASE("THM_3_3 holds with the exact dimension") {
  Instance inst;
  inst.params["n"] = 4;
  const TheoremReport r = check("THM_3_3", inst);
  CHECK(r.outcome == Outcome::Holds);
  CHECK(detail(r, "dim") == "10");
}

TEST_CASE("THM_6_6 on the stored 7x7 pair") {
  const IdempotentPair p = idempotent_pair_7x7();
  const TheoremReport r = check("THM_6_6", pair_instance(p.e, p.f, "E", "F"));
  CHECK(r.outcome == Outcome::Holds);
  CHECK(detail(r, "dim") == "9");
}

TEST_CASE("LEM_4_2 marks a non-Toeplitz matrix not applicable") {
  SplitMix64 rng(501);
  QMatrix a;
  do {
    a = random_positive_matrix_rect(3, 5, rng, 60, 3);
  } while (is_positive_matrix(QMatrix(cycle(3) * a - a * cycle(5))));
  Instance inst;
  inst.mats["A"] = a;
  const TheoremReport r = check("LEM_4_2", inst);
  CHECK(r.outcome == Outcome::NotApplicable);
  CHECK(detail(r, "hypothesis_failed") == "cma_ge_acn");
}

TEST_CASE("LEM_2_1 on a cycle and its square") {
  const TheoremReport r = check("LEM_2_1", pair_instance(cycle(4), mat_pow(cycle(4), 2)));
  CHECK(r.outcome == Outcome::Holds);

  // A pair without any positive ideal-irreducible factor is not applicable.
  const TheoremReport na = check("LEM_2_1", pair_instance(jordan_block(3), identity(3)));
  CHECK(na.outcome == Outcome::NotApplicable);
}

TEST_CASE("THM_3_2 reports both bounds") {
  const auto [j, b] = gerstenhaber_witness(4);
  const TheoremReport r = check("THM_3_2", pair_instance(j, b));
  CHECK(r.outcome == Outcome::Holds);
  CHECK(detail(r, "dim") == "10");
  CHECK(detail(r, "gauss_bound") == "10");
  CHECK(detail(r, "refined_bound") == "10");

  const TheoremReport na =
      check("THM_3_2", pair_instance(make_matrix({{0, 1}, {-1, 0}}), identity(2)));
  CHECK(na.outcome == Outcome::NotApplicable);
}

TEST_CASE("COR_4_3 exact solution space") {
  for (const auto& [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {2, 4}, {4, 6}, {5, 3}}) {
    Instance inst;
    inst.params["m"] = m;
    inst.params["n"] = n;
    const TheoremReport r = check("COR_4_3", inst);
    CHECK(r.outcome == Outcome::Holds);
  }
}

TEST_CASE("THM_4_5 on commuting permutation instances") {
  const QMatrix p = permutation_from_cycle_type({2, 3});
  const TheoremReport r = check("THM_4_5", pair_instance(QMatrix(p + p * p), p, "A", "P"));
  CHECK(r.outcome == Outcome::Holds);

  const TheoremReport na =
      check("THM_4_5", pair_instance(identity(3), jordan_block(3), "A", "P"));
  CHECK(na.outcome == Outcome::NotApplicable);
}

TEST_CASE("PROP_5_2, COR_5_3, THM_5_4 on compatible instances") {
  CompanionSpec spec;
  spec.coefficients = {Rational(0), Rational(0), Rational(2), Rational(1)};
  const QMatrix a = companion(spec);
  const QMatrix b = make_matrix({{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}});
  CHECK(commutator_sign(a, b) == SignClass::Positive);

  const TheoremReport prop = check("PROP_5_2", pair_instance(a, b));
  CHECK(prop.outcome == Outcome::Holds);
  CHECK(detail(prop, "zero_multiplicity") == "2");

  const TheoremReport bound = check("THM_5_4", pair_instance(a, b));
  CHECK(bound.outcome == Outcome::Holds);

  Instance inst;
  inst.mats["B"] = gerstenhaber_witness(5).second;
  CHECK(check("COR_5_3", inst).outcome == Outcome::Holds);
}

TEST_CASE("idempotent relation predicates on the all-ones idempotent") {
  const Index n = 3;
  QMatrix ones = zeros(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) ones(i, j) = Rational(1, static_cast<long>(n));

  CHECK(check("LEM_6_1", pair_instance(ones, ones, "E", "F")).outcome == Outcome::Holds);
  CHECK(check("LEM_6_2", pair_instance(ones, identity(n), "E", "F")).outcome ==
        Outcome::Holds);
  CHECK(check("THM_6_4", pair_instance(ones, ones, "E", "F")).outcome == Outcome::Holds);

  Instance a_inst = pair_instance(ones, QMatrix(identity(n) + ones * Rational(2)), "E", "A");
  CHECK(check("THM_6_3", a_inst).outcome == Outcome::Holds);

  // The 7x7 pair has no strictly positive member: not applicable.
  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(check("LEM_6_1", pair_instance(p7.e, p7.f, "E", "F")).outcome ==
        Outcome::NotApplicable);
}

TEST_CASE("THM_NIL, GLS, COR_TRI, LEM_GN on catalan and stored pairs") {
  const IdempotentPair cat = catalan_idempotent_pair(6);
  CHECK(check("THM_NIL", pair_instance(cat.e, cat.f, "E", "F")).outcome == Outcome::Holds);
  CHECK(check("GLS", pair_instance(cat.e, cat.f, "E", "F")).outcome == Outcome::Holds);

  const IdempotentPair p7 = idempotent_pair_7x7();
  CHECK(check("COR_TRI", pair_instance(p7.e, p7.f, "E", "F")).outcome == Outcome::Holds);

  Instance gn = pair_instance(p7.e, p7.f, "E", "F");
  gn.params["n"] = 2;
  CHECK(check("LEM_GN", gn).outcome == Outcome::Holds);

  // Catalan pairs have negative entries, so COR_TRI's fe >= 0 hypothesis fails.
  const IdempotentPair cat3 = catalan_idempotent_pair(3);
  CHECK(check("COR_TRI", pair_instance(cat3.e, cat3.f, "E", "F")).outcome ==
        Outcome::NotApplicable);
}

TEST_CASE("unknown theorem and malformed instances raise input errors") {
  Instance inst;
  CHECK_THROWS_AS(check("THM_9_9", inst), std::invalid_argument);
  CHECK_THROWS_AS(check("THM_3_2", inst), std::invalid_argument);  // missing matrices
  CHECK_THROWS_AS(check("COR_4_3", inst), std::invalid_argument);  // missing params
}

TEST_CASE("instance JSON round-trip and digest stability") {
  Instance inst = pair_instance(cycle(3), jordan_block(3));
  inst.params["n"] = 2;
  const Instance back = Instance::from_json(inst.to_json());
  CHECK(exactly_equal(back.mats.at("A"), cycle(3)));
  CHECK(back.params.at("n") == 2);
  CHECK(inst.digest() == back.digest());
  CHECK(inst.digest().size() == 16);
}

TEST_CASE("2x2 positive idempotent pattern holds for THM_6_6") {
  const QMatrix e = make_matrix({{1, 0}, {0, 0}});
  const QMatrix f = make_matrix({{1, 1}, {0, 0}});
  const TheoremReport r = check("THM_6_6", pair_instance(e, f, "E", "F"));
  CHECK(r.outcome == Outcome::Holds);
  CHECK(detail(r, "dim") == "3");

  const TheoremReport na = check("THM_6_6", pair_instance(f, e, "E", "F"));
  CHECK(na.outcome == Outcome::NotApplicable);  // commutator is negative
}

TEST_CASE("random instances are deterministic in the seed") {
  for (const std::string& id : theorem_ids()) {
    const Instance a = random_instance(id, 3, 7, 99);
    const Instance b = random_instance(id, 3, 7, 99);
    CHECK(a.to_json() == b.to_json());
  }
}

TEST_CASE("small suite: zero violations, deterministic, all predicates present") {
  const SuiteResult first = run_suite(3, 8, 1234);
  CHECK(first.rows.size() == theorem_ids().size());
  CHECK(first.total_violated() == 0);
  for (const auto& row : first.rows) CHECK(row.holds + row.not_applicable > 0);

  const SuiteResult again = run_suite(3, 8, 1234);
  CHECK(first.to_json() == again.to_json());

  const SuiteResult parallel = run_suite(3, 8, 1234, 2);
  CHECK(first.to_json() == parallel.to_json());
}

TEST_CASE("suite at n_max=1 with one trial holds trivially") {
  const SuiteResult tiny = run_suite(1, 1, 5);
  CHECK(tiny.total_violated() == 0);
}

TEST_CASE("suite restricted to one theorem") {
  const SuiteResult only = run_suite(2, 5, 11, 1, std::string("THM_3_3"));
  CHECK(only.rows.size() == 1);
  CHECK(only.rows[0].theorem_id == "THM_3_3");
  CHECK(only.rows[0].violated == 0);
  CHECK(only.rows[0].holds > 0);
}
