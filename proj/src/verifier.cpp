#include "semicomm/verifier.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "semicomm/algebra.hpp"
#include "semicomm/constructions.hpp"
#include "semicomm/order.hpp"
#include "semicomm/rng.hpp"

namespace semicomm {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::NotApplicable: return "not-applicable";
    case Outcome::Violated: return "violated";
  }
  return "?";
}

json Instance::to_json() const {
  json j = json::object();
  for (const auto& [name, m] : mats) j[name] = matrix_to_json(m);
  for (const auto& [name, v] : params) j[name] = v;
  return j;
}

Instance Instance::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance JSON must be an object");
  Instance inst;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object())
      inst.mats[key] = matrix_from_json(value, key);
    else if (value.is_number_integer())
      inst.params[key] = value.get<long>();
    else
      throw std::invalid_argument("instance key \"" + key +
                                  "\" must be a matrix object or an integer");
  }
  return inst;
}

std::string Instance::digest() const { return fnv1a_hex(to_json().dump()); }

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "LEM_2_1", "THM_3_2", "THM_3_3", "LEM_4_2", "COR_4_3",  "THM_4_5",
      "PROP_5_2", "COR_5_3", "THM_5_4", "LEM_6_1", "LEM_6_2", "THM_6_3",
      "THM_6_4", "THM_6_6", "LEM_GN",  "THM_NIL", "GLS",      "COR_TRI"};
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

using Details = std::vector<std::pair<std::string, std::string>>;

void put(Details& d, const std::string& key, const std::string& value) {
  d.emplace_back(key, value);
}
void put(Details& d, const std::string& key, long value) {
  d.emplace_back(key, std::to_string(value));
}
void put(Details& d, const std::string& key, bool value) {
  d.emplace_back(key, value ? "true" : "false");
}
void put(Details& d, const std::string& key, SignClass value) {
  d.emplace_back(key, to_string(value));
}

const QMatrix& need_mat(const Instance& inst, std::initializer_list<const char*> names,
                        const std::string& id) {
  for (const char* name : names) {
    const auto it = inst.mats.find(name);
    if (it != inst.mats.end()) return it->second;
  }
  throw std::invalid_argument("instance for " + id + " is missing matrix \"" +
                              std::string(*names.begin()) + "\"");
}

long need_param(const Instance& inst, const std::string& name, const std::string& id) {
  const auto it = inst.params.find(name);
  if (it == inst.params.end())
    throw std::invalid_argument("instance for " + id + " is missing parameter \"" + name + "\"");
  return it->second;
}

bool nonneg(const QMatrix& m) { return is_positive_matrix(m); }

bool positive_or_zero(SignClass s) {
  return s == SignClass::Positive || s == SignClass::Zero;
}

struct Ctx {
  TheoremReport report;
  bool applicable = true;

  explicit Ctx(const std::string& id, const Instance& inst) {
    report.theorem_id = id;
    report.instance_digest = inst.digest();
  }

  // Records a hypothesis; the first failed one marks the report NA.
  void hypothesis(const std::string& name, bool ok) {
    if (!ok && applicable) {
      applicable = false;
      put(report.details, "hypothesis_failed", name);
    }
  }

  // Records a conclusion; a failed one flips the outcome to Violated.
  bool conclusion(const std::string& name, bool ok) {
    put(report.details, name, ok);
    if (!ok) report.outcome = Outcome::Violated;
    return ok;
  }

  TheoremReport finish() {
    if (!applicable) {
      report.outcome = Outcome::NotApplicable;
    } else if (report.outcome != Outcome::Violated) {
      report.outcome = Outcome::Holds;
    }
    return std::move(report);
  }
};

long gauss_bound(long n) { return n * (n + 1) / 2; }

TheoremReport check_lem_2_1(const Instance& inst) {
  Ctx ctx("LEM_2_1", inst);
  const QMatrix& a = need_mat(inst, {"A"}, "LEM_2_1");
  const QMatrix& b = need_mat(inst, {"B"}, "LEM_2_1");
  require_same_square(a, b, "LEM_2_1");
  const SignClass cs = commutator_sign(a, b);
  put(ctx.report.details, "commutator_sign", cs);
  ctx.hypothesis("semi_commuting", cs != SignClass::Mixed);
  bool irreducible_factor = false;
  if (ctx.applicable) {
    if (nonneg(a) && is_ideal_irreducible(a)) irreducible_factor = true;
    if (!irreducible_factor && nonneg(b) && is_ideal_irreducible(b)) irreducible_factor = true;
    ctx.hypothesis("one_factor_positive_ideal_irreducible", irreducible_factor);
  }
  if (ctx.applicable) ctx.conclusion("commute", cs == SignClass::Zero);
  return ctx.finish();
}

TheoremReport check_thm_3_2(const Instance& inst) {
  Ctx ctx("THM_3_2", inst);
  const QMatrix& a = need_mat(inst, {"A"}, "THM_3_2");
  const QMatrix& b = need_mat(inst, {"B"}, "THM_3_2");
  require_same_square(a, b, "THM_3_2");
  ctx.hypothesis("both_positive", nonneg(a) && nonneg(b));
  if (ctx.applicable)
    ctx.hypothesis("semi_commuting", semi_commute(a, b));
  if (ctx.applicable) {
    const long n = a.rows();
    const Index dim = unital_algebra_basis({a, b}).dim;
    const Index refined = refined_bound(a, b);
    put(ctx.report.details, "dim", dim);
    put(ctx.report.details, "gauss_bound", gauss_bound(n));
    put(ctx.report.details, "refined_bound", refined);
    ctx.conclusion("dim_le_gauss_bound", dim <= gauss_bound(n));
    ctx.conclusion("dim_le_refined_bound", dim <= refined);
  }
  return ctx.finish();
}

TheoremReport check_thm_3_3(const Instance& inst) {
  Ctx ctx("THM_3_3", inst);
  const long n = need_param(inst, "n", "THM_3_3");
  ctx.hypothesis("n_ge_1", n >= 1);
  if (ctx.applicable) {
    const auto [j, b] = gerstenhaber_witness(n);
    const Index dim = unital_algebra_basis({j, b}).dim;
    put(ctx.report.details, "dim", dim);
    put(ctx.report.details, "target", gauss_bound(n));
    ctx.conclusion("commutator_positive",
                   positive_or_zero(commutator_sign(j, b)));
    ctx.conclusion("dim_attains_bound", dim == gauss_bound(n));
  }
  return ctx.finish();
}

TheoremReport check_lem_4_2(const Instance& inst) {
  Ctx ctx("LEM_4_2", inst);
  const QMatrix& a = need_mat(inst, {"A"}, "LEM_4_2");
  const Index m = a.rows(), n = a.cols();
  const QMatrix lhs = cycle(m) * a;
  const QMatrix rhs = a * cycle(n);
  const SignClass diff = sign_class(lhs - rhs);
  put(ctx.report.details, "cma_minus_acn_sign", diff);
  ctx.hypothesis("cma_ge_acn", positive_or_zero(diff));
  if (ctx.applicable) {
    ctx.conclusion("cma_eq_acn", exactly_equal(lhs, rhs));
    ctx.conclusion("wraparound_toeplitz", verify_intertwiner_structure(a, m, n));
  }
  return ctx.finish();
}

TheoremReport check_cor_4_3(const Instance& inst) {
  Ctx ctx("COR_4_3", inst);
  const long m = need_param(inst, "m", "COR_4_3");
  const long n = need_param(inst, "n", "COR_4_3");
  ctx.hypothesis("sizes_ge_1", m >= 1 && n >= 1);
  if (!ctx.applicable) return ctx.finish();

  // Exact kernel dimension of X -> C_m X - X C_n on m x n matrices.
  const QMatrix cm = cycle(m), cn = cycle(n);
  const Index unknowns = m * n;
  QMatrix system = QMatrix::Zero(unknowns, unknowns);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < n; ++c) {
      QMatrix basis_mat = QMatrix::Zero(m, n);
      basis_mat(r, c) = Rational(1);
      const QMatrix image = cm * basis_mat - basis_mat * cn;
      system.col(r * n + c) = vectorize(image).transpose();
    }
  const Index kernel_dim = unknowns - rref(system).rank;
  const long d = std::gcd(m, n);
  put(ctx.report.details, "kernel_dim", kernel_dim);
  put(ctx.report.details, "gcd", d);
  ctx.conclusion("kernel_dim_eq_gcd", kernel_dim == d);

  const auto basis = intertwiner_basis(m, n);
  ctx.conclusion("basis_count_eq_gcd", static_cast<long>(basis.size()) == d);
  bool all_intertwine = true;
  RowSpan stacked(m * n);
  for (const QMatrix& u : basis) {
    if (!exactly_equal(cm * u, u * cn)) all_intertwine = false;
    stacked.insert(vectorize(u));
  }
  ctx.conclusion("basis_intertwines", all_intertwine);
  ctx.conclusion("basis_independent_and_spans",
                 stacked.rank() == d && kernel_dim == d);
  return ctx.finish();
}

TheoremReport check_thm_4_5(const Instance& inst) {
  Ctx ctx("THM_4_5", inst);
  const QMatrix& a = need_mat(inst, {"A"}, "THM_4_5");
  const QMatrix& p = need_mat(inst, {"P", "B"}, "THM_4_5");
  require_same_square(a, p, "THM_4_5");
  ctx.hypothesis("p_is_permutation", is_permutation_matrix(p));
  if (ctx.applicable) {
    const SignClass cs = commutator_sign(a, p);
    put(ctx.report.details, "commutator_sign", cs);
    ctx.hypothesis("semi_commuting", cs != SignClass::Mixed);
    if (ctx.applicable) {
      ctx.conclusion("commute", cs == SignClass::Zero);
      const Index dim = unital_algebra_basis({a, p}).dim;
      put(ctx.report.details, "dim", dim);
      ctx.conclusion("dim_le_n", dim <= a.rows());
    }
  }
  return ctx.finish();
}

// Shared hypothesis scan for the companion-matrix results.
struct CompanionHyp {
  bool ok = false;
  Index k = 0;  // algebraic multiplicity of the zero eigenvalue
};

CompanionHyp companion_hypotheses(Ctx& ctx, const QMatrix& a, const QMatrix& b) {
  CompanionHyp hyp;
  require_same_square(a, b, ctx.report.theorem_id.c_str());
  const auto spec = as_companion(a);
  ctx.hypothesis("a_is_companion", spec.has_value());
  if (!ctx.applicable) return hyp;
  ctx.hypothesis("a_positive", nonneg(a));
  ctx.hypothesis("b_positive", nonneg(b));
  if (ctx.applicable) ctx.hypothesis("semi_commuting", semi_commute(a, b));
  if (!ctx.applicable) return hyp;
  hyp.ok = true;
  hyp.k = spec->zero_multiplicity();
  put(ctx.report.details, "zero_multiplicity", hyp.k);
  return hyp;
}

TheoremReport check_prop_5_2(const Instance& inst) {
  Ctx ctx("PROP_5_2", inst);
  const QMatrix& a = need_mat(inst, {"A"}, "PROP_5_2");
  const QMatrix& b = need_mat(inst, {"B"}, "PROP_5_2");
  const CompanionHyp hyp = companion_hypotheses(ctx, a, b);
  if (hyp.ok) ctx.hypothesis("zero_multiplicity_ge_1", hyp.k >= 1);
  if (ctx.applicable && hyp.ok) {
    const Index n = a.rows(), k = hyp.k;
    ctx.conclusion("leading_block_upper_triangular",
                   is_upper_triangular(QMatrix(b.block(0, 0, k, k))));
    if (k < n)
      ctx.conclusion("lower_left_block_zero",
                     is_zero_matrix(QMatrix(b.block(k, 0, n - k, k))));
  }
  return ctx.finish();
}

TheoremReport check_cor_5_3(const Instance& inst) {
  Ctx ctx("COR_5_3", inst);
  const QMatrix& b = need_mat(inst, {"B", "A"}, "COR_5_3");
  require_square(b, "COR_5_3");
  const Index n = b.rows();
  ctx.hypothesis("b_positive", nonneg(b));
  if (ctx.applicable)
    ctx.hypothesis("semi_commutes_with_jordan_block", semi_commute(jordan_block(n), b));
  if (ctx.applicable) ctx.conclusion("b_upper_triangular", is_upper_triangular(b));
  return ctx.finish();
}

TheoremReport check_thm_5_4(const Instance& inst) {
  Ctx ctx("THM_5_4", inst);
  const QMatrix& a = need_mat(inst, {"A"}, "THM_5_4");
  const QMatrix& b = need_mat(inst, {"B"}, "THM_5_4");
  const CompanionHyp hyp = companion_hypotheses(ctx, a, b);
  if (ctx.applicable && hyp.ok) {
    const long n = a.rows(), k = hyp.k;
    const long bound = (2 * n - k) * (k + 1) / 2;
    const Index dim = unital_algebra_basis({a, b}).dim;
    put(ctx.report.details, "dim", dim);
    put(ctx.report.details, "bound", bound);
    ctx.conclusion("dim_le_bound", dim <= bound);
  }
  return ctx.finish();
}

// Strict-positivity flags shared by the idempotent results.
struct StrictFlags {
  bool e = false, f = false, et = false, ft = false;
};

StrictFlags strict_flags(Details& d, const QMatrix& e, const QMatrix& f) {
  StrictFlags s;
  s.e = is_strictly_positive(e);
  s.f = is_strictly_positive(f);
  s.et = is_strictly_positive(QMatrix(e.transpose()));
  s.ft = is_strictly_positive(QMatrix(f.transpose()));
  put(d, "strict_e", s.e);
  put(d, "strict_f", s.f);
  put(d, "strict_e_transpose", s.et);
  put(d, "strict_f_transpose", s.ft);
  return s;
}

// Base hypotheses for the positive-idempotent results: both matrices are
// positive idempotents and ef - fe is entrywise >= 0.
bool positive_idempotent_hyp(Ctx& ctx, const QMatrix& e, const QMatrix& f) {
  require_same_square(e, f, ctx.report.theorem_id.c_str());
  ctx.hypothesis("e_idempotent", is_idempotent(e));
  if (ctx.applicable) ctx.hypothesis("f_idempotent", is_idempotent(f));
  if (ctx.applicable) ctx.hypothesis("both_positive", nonneg(e) && nonneg(f));
  if (ctx.applicable) {
    const SignClass cs = commutator_sign(e, f);
    put(ctx.report.details, "commutator_sign", cs);
    ctx.hypothesis("ef_ge_fe", positive_or_zero(cs));
  }
  return ctx.applicable;
}

// The adjoint cases of the relation lemmas are matrix-transpose cases here:
// conclusions about (e, f) under strict positivity of a transpose follow from
// the direct cases applied to the reversed transposed pair (f^T, e^T), whose
// commutator is [e,f]^T.
TheoremReport check_lem_6_1(const Instance& inst) {
  Ctx ctx("LEM_6_1", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "LEM_6_1");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "LEM_6_1");
  if (!positive_idempotent_hyp(ctx, e, f)) return ctx.finish();
  const StrictFlags s = strict_flags(ctx.report.details, e, f);
  ctx.hypothesis("some_strict_positivity", s.e || s.f || s.et || s.ft);
  if (!ctx.applicable) return ctx.finish();
  const IdempotentRelations rel = check_idempotent_relations(e, f);
  const IdempotentRelations rel_t =
      check_idempotent_relations(QMatrix(f.transpose()), QMatrix(e.transpose()));
  if (s.e) {
    ctx.conclusion("efe_eq_fe", rel.efe_eq_fe);
    ctx.conclusion("fe_idempotent", rel.fe_idempotent);
  }
  if (s.f) {
    ctx.conclusion("fef_eq_ef", rel.fef_eq_ef);
    ctx.conclusion("ef_idempotent", rel.ef_idempotent);
  }
  if (s.ft) {  // f^T e^T f^T = e^T f^T transposes to fef = fe
    ctx.conclusion("fef_eq_fe", rel_t.efe_eq_fe);
    ctx.conclusion("fe_idempotent_t", rel_t.fe_idempotent);
  }
  if (s.et) {  // e^T f^T e^T = f^T e^T transposes to efe = ef
    ctx.conclusion("efe_eq_ef", rel_t.fef_eq_ef);
    ctx.conclusion("ef_idempotent_t", rel_t.ef_idempotent);
  }
  return ctx.finish();
}

TheoremReport check_lem_6_2(const Instance& inst) {
  Ctx ctx("LEM_6_2", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "LEM_6_2");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "LEM_6_2");
  if (!positive_idempotent_hyp(ctx, e, f)) return ctx.finish();
  const StrictFlags s = strict_flags(ctx.report.details, e, f);
  const bool direct_case = s.e || s.f;
  const bool transpose_case = s.et || s.ft;
  const bool commute_case = (s.e && s.et) || (s.f && s.ft);
  ctx.hypothesis("some_strict_positivity", direct_case || transpose_case);
  if (!ctx.applicable) return ctx.finish();
  const IdempotentRelations rel = check_idempotent_relations(e, f);
  if (direct_case) ctx.conclusion("commutator_square_zero", rel.comm_square_zero);
  if (transpose_case) {
    const IdempotentRelations rel_t =
        check_idempotent_relations(QMatrix(f.transpose()), QMatrix(e.transpose()));
    ctx.conclusion("commutator_square_zero_t", rel_t.comm_square_zero);
  }
  if (commute_case) ctx.conclusion("commute", rel.commuting);
  return ctx.finish();
}

TheoremReport check_thm_6_3(const Instance& inst) {
  Ctx ctx("THM_6_3", inst);
  const QMatrix& e = need_mat(inst, {"E"}, "THM_6_3");
  const QMatrix& a = need_mat(inst, {"A", "F"}, "THM_6_3");
  require_same_square(e, a, "THM_6_3");
  ctx.hypothesis("e_positive_idempotent", nonneg(e) && is_idempotent(e));
  if (ctx.applicable) {
    const SignClass cs = commutator_sign(e, a);
    put(ctx.report.details, "commutator_sign", cs);
    ctx.hypothesis("ea_ge_ae", positive_or_zero(cs));
  }
  if (!ctx.applicable) return ctx.finish();
  const bool se = is_strictly_positive(e);
  const bool set = is_strictly_positive(QMatrix(e.transpose()));
  put(ctx.report.details, "strict_e", se);
  put(ctx.report.details, "strict_e_transpose", set);
  ctx.hypothesis("some_strict_positivity", se || set);
  if (!ctx.applicable) return ctx.finish();
  if (se) {
    const IdempotentRelations rel = check_idempotent_relations(e, a);
    ctx.conclusion("ae_eq_eae", rel.efe_eq_fe);
    ctx.conclusion("commutator_square_zero", rel.comm_square_zero);
  }
  if (set) {  // e^T a^T e^T = a^T e^T transposes to eae = ea
    const IdempotentRelations rel_t =
        check_idempotent_relations(QMatrix(e.transpose()), QMatrix(a.transpose()));
    ctx.conclusion("ea_eq_eae", rel_t.efe_eq_fe);
    ctx.conclusion("commutator_square_zero_t", rel_t.comm_square_zero);
  }
  if (se && set)
    ctx.conclusion("commute", is_zero_matrix(commutator(e, a)));
  return ctx.finish();
}

TheoremReport check_thm_6_4(const Instance& inst) {
  Ctx ctx("THM_6_4", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "THM_6_4");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "THM_6_4");
  if (!positive_idempotent_hyp(ctx, e, f)) return ctx.finish();
  const StrictFlags s = strict_flags(ctx.report.details, e, f);
  const bool one_sided = s.e || s.f || s.et || s.ft;
  const bool two_sided = (s.e && s.et) || (s.f && s.ft);
  ctx.hypothesis("some_strict_positivity", one_sided);
  if (!ctx.applicable) return ctx.finish();
  const long bound = two_sided ? 4 : 6;
  const Index dim = unital_algebra_basis({e, f}).dim;
  put(ctx.report.details, "dim", dim);
  put(ctx.report.details, "bound", bound);
  ctx.conclusion("dim_le_bound", dim <= bound);
  return ctx.finish();
}

TheoremReport check_thm_6_6(const Instance& inst) {
  Ctx ctx("THM_6_6", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "THM_6_6");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "THM_6_6");
  if (!positive_idempotent_hyp(ctx, e, f)) return ctx.finish();
  const QMatrix k = commutator(e, f);
  const QMatrix k2 = k * k;
  const Index dim = unital_algebra_basis({e, f}).dim;
  put(ctx.report.details, "dim", dim);
  ctx.conclusion("dim_le_9", dim <= 9);
  ctx.conclusion("k_cubed_zero", is_zero_matrix(k2 * k));
  ctx.conclusion("k2e_zero", is_zero_matrix(k2 * e));
  ctx.conclusion("k2f_zero", is_zero_matrix(k2 * f));
  ctx.conclusion("k2ef_zero", is_zero_matrix(k2 * e * f));
  return ctx.finish();
}

TheoremReport check_lem_gn(const Instance& inst) {
  Ctx ctx("LEM_GN", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "LEM_GN");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "LEM_GN");
  require_same_square(e, f, "LEM_GN");
  const auto it = inst.params.find("n");
  const long depth = it == inst.params.end() ? 1 : it->second;
  put(ctx.report.details, "filtration_depth", depth);
  ctx.hypothesis("depth_ge_0", depth >= 0);
  if (ctx.applicable) ctx.hypothesis("both_idempotent", is_idempotent(e) && is_idempotent(f));
  if (ctx.applicable)
    ctx.conclusion("span_identity", verify_lemma_gn(e, f, depth));
  return ctx.finish();
}

TheoremReport check_thm_nil(const Instance& inst) {
  Ctx ctx("THM_NIL", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "THM_NIL");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "THM_NIL");
  require_same_square(e, f, "THM_NIL");
  ctx.hypothesis("both_idempotent", is_idempotent(e) && is_idempotent(f));
  if (!ctx.applicable) return ctx.finish();
  const auto nil = commutator_nil_index(e, f);
  ctx.hypothesis("commutator_nilpotent", nil.has_value());
  if (!ctx.applicable) return ctx.finish();
  const long k = *nil;
  const Index dim = unital_algebra_basis({e, f}).dim;
  put(ctx.report.details, "nil_index", k);
  put(ctx.report.details, "dim", dim);
  ctx.conclusion("dim_le_4k", dim <= 4 * k);
  return ctx.finish();
}

TheoremReport check_gls(const Instance& inst) {
  Ctx ctx("GLS", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "GLS");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "GLS");
  require_same_square(e, f, "GLS");
  ctx.hypothesis("both_idempotent", is_idempotent(e) && is_idempotent(f));
  if (!ctx.applicable) return ctx.finish();
  const long n = e.rows();
  const long bound = (n % 2 == 0) ? 2 * n : 2 * n - 1;
  const Index dim = unital_algebra_basis({e, f}).dim;
  put(ctx.report.details, "dim", dim);
  put(ctx.report.details, "bound", bound);
  ctx.conclusion("dim_le_parity_bound", dim <= bound);
  return ctx.finish();
}

TheoremReport check_cor_tri(const Instance& inst) {
  Ctx ctx("COR_TRI", inst);
  const QMatrix& e = need_mat(inst, {"E", "A"}, "COR_TRI");
  const QMatrix& f = need_mat(inst, {"F", "B"}, "COR_TRI");
  require_same_square(e, f, "COR_TRI");
  ctx.hypothesis("both_idempotent", is_idempotent(e) && is_idempotent(f));
  if (ctx.applicable) {
    const QMatrix fe = f * e;
    ctx.hypothesis("fe_positive", nonneg(fe));
    if (ctx.applicable) ctx.hypothesis("ef_ge_fe", nonneg(QMatrix(e * f - fe)));
  }
  if (!ctx.applicable) return ctx.finish();
  const long n = e.rows();
  const long bound = (n % 2 == 0) ? 2 * n : 2 * n - 1;
  const Index dim = unital_algebra_basis({e, f}).dim;
  put(ctx.report.details, "dim", dim);
  put(ctx.report.details, "bound", bound);
  ctx.conclusion("pair_triangularizable", mccoy_triangularizable(e, f));
  ctx.conclusion("dim_le_parity_bound", dim <= bound);
  return ctx.finish();
}

}  // namespace

TheoremReport check(const std::string& theorem_id, const Instance& instance) {
  if (theorem_id == "LEM_2_1") return check_lem_2_1(instance);
  if (theorem_id == "THM_3_2") return check_thm_3_2(instance);
  if (theorem_id == "THM_3_3") return check_thm_3_3(instance);
  if (theorem_id == "LEM_4_2") return check_lem_4_2(instance);
  if (theorem_id == "COR_4_3") return check_cor_4_3(instance);
  if (theorem_id == "THM_4_5") return check_thm_4_5(instance);
  if (theorem_id == "PROP_5_2") return check_prop_5_2(instance);
  if (theorem_id == "COR_5_3") return check_cor_5_3(instance);
  if (theorem_id == "THM_5_4") return check_thm_5_4(instance);
  if (theorem_id == "LEM_6_1") return check_lem_6_1(instance);
  if (theorem_id == "LEM_6_2") return check_lem_6_2(instance);
  if (theorem_id == "THM_6_3") return check_thm_6_3(instance);
  if (theorem_id == "THM_6_4") return check_thm_6_4(instance);
  if (theorem_id == "THM_6_6") return check_thm_6_6(instance);
  if (theorem_id == "LEM_GN") return check_lem_gn(instance);
  if (theorem_id == "THM_NIL") return check_thm_nil(instance);
  if (theorem_id == "GLS") return check_gls(instance);
  if (theorem_id == "COR_TRI") return check_cor_tri(instance);
  throw std::invalid_argument("unknown theorem id: " + theorem_id);
}

// ---------------------------------------------------------------------------
// Seeded instance generators. Each theorem draws from a family that can
// actually satisfy its hypotheses, plus a share of unconstrained instances
// so the not-applicable path is exercised too.
// ---------------------------------------------------------------------------

namespace {

QMatrix positive_poly_in(const QMatrix& a, SplitMix64& rng) {
  const Index n = a.rows();
  QMatrix b = QMatrix::Zero(n, n);
  QMatrix power = identity(n);
  const long deg = rng.range(1, 3);
  bool nonzero = false;
  for (long j = 0; j <= deg; ++j) {
    const long c = rng.range(0, 2);
    if (c > 0) {
      b += power * Rational(c);
      nonzero = true;
    }
    if (j < deg) power = power * a;
  }
  if (!nonzero) b = identity(n);
  return b;
}

// diag(v_0 <= ... <= v_{k-1} <= c, c, ..., c): semi-commutes with a companion
// matrix of zero-multiplicity k, with commutator supported on the
// super-diagonal.
QMatrix companion_compatible_diagonal(Index n, Index k, SplitMix64& rng) {
  const long tail = rng.range(2, 6);
  std::vector<long> head(static_cast<std::size_t>(k));
  for (auto& v : head) v = rng.range(0, tail);
  std::sort(head.begin(), head.end());
  QMatrix d = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    d(i, i) = Rational(i < k ? head[static_cast<std::size_t>(i)] : tail);
  return d;
}

QMatrix random_companion(Index n, Index k, SplitMix64& rng) {
  CompanionSpec spec;
  spec.coefficients.assign(static_cast<std::size_t>(n), Rational(0));
  for (Index j = k; j < n; ++j) {
    const bool force_nonzero = (j == k);  // pins the zero multiplicity at k
    const long c = force_nonzero ? rng.range(1, 3) : rng.range(0, 2);
    spec.coefficients[static_cast<std::size_t>(j)] = Rational(c);
  }
  return companion(spec);
}

QMatrix strictly_positive_rank_one(Index n, SplitMix64& rng) {
  QMatrix x(n, 1), a(n, 1);
  for (Index i = 0; i < n; ++i) {
    x(i, 0) = Rational(rng.range(1, 3));
    a(i, 0) = Rational(rng.range(1, 3));
  }
  Rational dot(0);
  for (Index i = 0; i < n; ++i) dot += a(i, 0) * x(i, 0);
  return (x * a.transpose()) * (Rational(1) / dot);
}

Instance companion_family_instance(Index n, Index k, SplitMix64& rng) {
  Instance inst;
  const QMatrix a = random_companion(n, k, rng);
  QMatrix b = companion_compatible_diagonal(n, k, rng);
  if (rng.chance(50)) b += positive_poly_in(a, rng) * Rational(rng.range(0, 1));
  inst.mats["A"] = a;
  inst.mats["B"] = b;
  return inst;
}

}  // namespace

Instance random_instance(const std::string& theorem_id, Index n, long trial,
                         std::uint64_t seed) {
  SplitMix64 rng(mix_keys({seed, key_of(theorem_id), static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(trial)}));
  Instance inst;

  if (theorem_id == "LEM_2_1") {
    QMatrix a = random_irreducible_positive(n, rng);
    QMatrix b = rng.chance(80) ? positive_poly_in(a, rng) : random_positive_matrix(n, rng);
    if (rng.chance(50)) std::swap(a, b);
    inst.mats["A"] = a;
    inst.mats["B"] = b;
    return inst;
  }
  if (theorem_id == "THM_3_2") {
    const auto& families = all_pair_families();
    const PairFamily family = families[static_cast<std::size_t>(trial) % families.size()];
    const auto [a, b] = random_semicommuting_pair(n, family, rng.next());
    inst.mats["A"] = a;
    inst.mats["B"] = b;
    return inst;
  }
  if (theorem_id == "THM_3_3") {
    inst.params["n"] = static_cast<long>(n);
    return inst;
  }
  if (theorem_id == "LEM_4_2") {
    const Index cols = static_cast<Index>(rng.range(1, 8));
    inst.mats["A"] = rng.chance(70) ? random_intertwiner_combination(n, cols, rng)
                                    : random_positive_matrix_rect(n, cols, rng);
    return inst;
  }
  if (theorem_id == "COR_4_3") {
    inst.params["m"] = static_cast<long>(n);
    inst.params["n"] = rng.range(1, 12);
    return inst;
  }
  if (theorem_id == "THM_4_5") {
    const auto sizes = random_cycle_type(n, rng);
    const QMatrix p_tilde = permutation_from_cycle_type(sizes);
    const QMatrix q = random_permutation(n, rng);
    const QMatrix p = q * p_tilde * q.transpose();
    QMatrix a;
    const long mode = rng.range(0, 9);
    if (mode < 6) {
      // Blockwise intertwiner structure, conjugated along with the cycles.
      QMatrix a_tilde = QMatrix::Zero(n, n);
      Index row_at = 0;
      for (Index bi = 0; bi < static_cast<Index>(sizes.size()); ++bi) {
        Index col_at = 0;
        for (Index bj = 0; bj < static_cast<Index>(sizes.size()); ++bj) {
          a_tilde.block(row_at, col_at, sizes[static_cast<std::size_t>(bi)],
                        sizes[static_cast<std::size_t>(bj)]) =
              random_intertwiner_combination(sizes[static_cast<std::size_t>(bi)],
                                             sizes[static_cast<std::size_t>(bj)], rng);
          col_at += sizes[static_cast<std::size_t>(bj)];
        }
        row_at += sizes[static_cast<std::size_t>(bi)];
      }
      a = q * a_tilde * q.transpose();
    } else if (mode < 8) {
      a = positive_poly_in(p, rng);
    } else {
      a = random_positive_matrix(n, rng);
    }
    inst.mats["A"] = a;
    inst.mats["P"] = p;
    return inst;
  }
  if (theorem_id == "PROP_5_2" || theorem_id == "THM_5_4") {
    const Index k_min = theorem_id == "PROP_5_2" ? 1 : 0;
    const Index k = static_cast<Index>(rng.range(k_min, static_cast<long>(n)));
    inst = companion_family_instance(n, k, rng);
    if (rng.chance(20)) inst.mats["B"] = random_positive_matrix(n, rng);
    return inst;
  }
  if (theorem_id == "COR_5_3") {
    SplitMix64 inner(rng.next());
    QMatrix b = companion_compatible_diagonal(n, n, inner);
    if (rng.chance(60)) b += positive_poly_in(jordan_block(n), inner);
    if (rng.chance(20)) b = random_positive_matrix(n, inner);
    inst.mats["B"] = b;
    return inst;
  }
  if (theorem_id == "LEM_6_1" || theorem_id == "LEM_6_2" || theorem_id == "THM_6_4") {
    const long mode = trial % 4;
    if (mode == 3) {
      const IdempotentPair pair = random_positive_semicommuting_idempotents(n, rng);
      inst.mats["E"] = pair.e;
      inst.mats["F"] = pair.f;
    } else {
      const QMatrix e = strictly_positive_rank_one(n, rng);
      inst.mats["E"] = e;
      if (mode == 0) inst.mats["F"] = e;
      if (mode == 1) inst.mats["F"] = identity(n);
      if (mode == 2) inst.mats["F"] = zeros(n, n);
    }
    return inst;
  }
  if (theorem_id == "THM_6_3") {
    const QMatrix e = rng.chance(70) ? strictly_positive_rank_one(n, rng)
                                     : random_rank_one_positive_idempotent(n, rng);
    QMatrix a;
    if (rng.chance(75)) {
      a = identity(n) * Rational(rng.range(-2, 2)) + e * Rational(rng.range(-2, 2));
    } else {
      a = random_positive_matrix(n, rng);
    }
    inst.mats["E"] = e;
    inst.mats["A"] = a;
    return inst;
  }
  if (theorem_id == "THM_6_6" || theorem_id == "COR_TRI") {
    if (trial % 5 == 4) {
      inst.mats["E"] = random_triangular_idempotent(n, rng);
      inst.mats["F"] = random_triangular_idempotent(n, rng);
    } else {
      const IdempotentPair pair = random_positive_semicommuting_idempotents(n, rng);
      inst.mats["E"] = pair.e;
      inst.mats["F"] = pair.f;
    }
    return inst;
  }
  if (theorem_id == "LEM_GN") {
    if (rng.chance(50)) {
      inst.mats["E"] = random_triangular_idempotent(n, rng);
      inst.mats["F"] = random_triangular_idempotent(n, rng);
    } else {
      const IdempotentPair pair = random_positive_semicommuting_idempotents(n, rng);
      inst.mats["E"] = pair.e;
      inst.mats["F"] = pair.f;
    }
    inst.params["n"] = trial % 3;
    return inst;
  }
  if (theorem_id == "THM_NIL") {
    inst.mats["E"] = random_triangular_idempotent(n, rng);
    inst.mats["F"] = random_triangular_idempotent(n, rng);
    return inst;
  }
  if (theorem_id == "GLS") {
    const long mode = trial % 3;
    if (mode == 0) {
      inst.mats["E"] = random_general_idempotent(n, rng);
      inst.mats["F"] = random_general_idempotent(n, rng);
    } else if (mode == 1) {
      inst.mats["E"] = random_triangular_idempotent(n, rng);
      inst.mats["F"] = random_triangular_idempotent(n, rng);
    } else {
      const IdempotentPair pair = random_positive_semicommuting_idempotents(n, rng);
      inst.mats["E"] = pair.e;
      inst.mats["F"] = pair.f;
    }
    return inst;
  }
  throw std::invalid_argument("unknown theorem id: " + theorem_id);
}

std::vector<Instance> constructed_witnesses(const std::string& theorem_id, Index n_max) {
  std::vector<Instance> out;
  const auto pair_instance = [](const QMatrix& a, const QMatrix& b, const char* ka = "A",
                                const char* kb = "B") {
    Instance inst;
    inst.mats[ka] = a;
    inst.mats[kb] = b;
    return inst;
  };

  if (theorem_id == "LEM_2_1") {
    for (Index n = 1; n <= n_max; ++n)
      out.push_back(pair_instance(cycle(n), mat_pow(cycle(n), 2)));
  } else if (theorem_id == "THM_3_2") {
    for (Index n = 1; n <= n_max; ++n) {
      const auto [j, b] = gerstenhaber_witness(n);
      out.push_back(pair_instance(j, b));
    }
  } else if (theorem_id == "THM_3_3") {
    for (Index n = 1; n <= n_max; ++n) {
      Instance inst;
      inst.params["n"] = static_cast<long>(n);
      out.push_back(inst);
    }
  } else if (theorem_id == "LEM_4_2") {
    for (const auto& [m, n] : std::vector<std::pair<Index, Index>>{{2, 2}, {4, 6}, {3, 5}, {1, 4}})
      for (const QMatrix& u : intertwiner_basis(m, n)) {
        Instance inst;
        inst.mats["A"] = u;
        out.push_back(inst);
      }
  } else if (theorem_id == "COR_4_3") {
    for (Index m = 1; m <= std::max<Index>(n_max, 6); ++m)
      for (Index n = 1; n <= std::max<Index>(n_max, 6); ++n) {
        Instance inst;
        inst.params["m"] = static_cast<long>(m);
        inst.params["n"] = static_cast<long>(n);
        out.push_back(inst);
      }
  } else if (theorem_id == "THM_4_5") {
    out.push_back(pair_instance(cycle(5) + identity(5), cycle(5), "A", "P"));
    const QMatrix p = permutation_from_cycle_type({2, 3});
    out.push_back(pair_instance(p + p * p, p, "A", "P"));
  } else if (theorem_id == "PROP_5_2" || theorem_id == "THM_5_4") {
    SplitMix64 rng(key_of(theorem_id));
    for (Index n = 2; n <= n_max; ++n)
      for (Index k = (theorem_id == "PROP_5_2" ? 1 : 0); k <= n; ++k)
        out.push_back(companion_family_instance(n, k, rng));
  } else if (theorem_id == "COR_5_3") {
    for (Index n = 1; n <= n_max; ++n) {
      Instance inst;
      inst.mats["B"] = gerstenhaber_witness(n).second;
      out.push_back(inst);
    }
  } else if (theorem_id == "LEM_6_1" || theorem_id == "LEM_6_2" || theorem_id == "THM_6_4") {
    for (Index n = 1; n <= n_max; ++n) {
      QMatrix ones = QMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) ones(i, j) = Rational(1, static_cast<long>(n));
      out.push_back(pair_instance(ones, ones, "E", "F"));
      out.push_back(pair_instance(ones, identity(n), "E", "F"));
    }
  } else if (theorem_id == "THM_6_3") {
    for (Index n = 1; n <= n_max; ++n) {
      QMatrix ones = QMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) ones(i, j) = Rational(1, static_cast<long>(n));
      out.push_back(pair_instance(ones, identity(n) + ones, "E", "A"));
    }
  } else if (theorem_id == "THM_6_6" || theorem_id == "COR_TRI") {
    const IdempotentPair p7 = idempotent_pair_7x7();
    const IdempotentPair p3 = idempotent_pair_3x3();
    out.push_back(pair_instance(p7.e, p7.f, "E", "F"));
    out.push_back(pair_instance(p3.e, p3.f, "E", "F"));
    out.push_back(pair_instance(make_matrix({{1, 0}, {0, 0}}), make_matrix({{1, 1}, {0, 0}}),
                                "E", "F"));
  } else if (theorem_id == "LEM_GN") {
    const IdempotentPair p7 = idempotent_pair_7x7();
    for (long depth = 0; depth <= 2; ++depth) {
      Instance inst = pair_instance(p7.e, p7.f, "E", "F");
      inst.params["n"] = depth;
      out.push_back(inst);
    }
    const IdempotentPair cat = catalan_idempotent_pair(5);
    Instance inst = pair_instance(cat.e, cat.f, "E", "F");
    inst.params["n"] = 1;
    out.push_back(inst);
  } else if (theorem_id == "THM_NIL" || theorem_id == "GLS") {
    for (Index n = 2; n <= n_max; ++n) {
      const IdempotentPair cat = catalan_idempotent_pair(n);
      out.push_back(pair_instance(cat.e, cat.f, "E", "F"));
    }
    const IdempotentPair p7 = idempotent_pair_7x7();
    const IdempotentPair p3 = idempotent_pair_3x3();
    out.push_back(pair_instance(p7.e, p7.f, "E", "F"));
    out.push_back(pair_instance(p3.e, p3.f, "E", "F"));
  }
  return out;
}

long SuiteResult::total_violated() const {
  long total = 0;
  for (const auto& row : rows) total += row.violated;
  return total;
}

json SuiteResult::to_json() const {
  json rows_json = json::array();
  for (const auto& row : rows)
    rows_json.push_back({{"theorem", row.theorem_id},
                         {"holds", row.holds},
                         {"not_applicable", row.not_applicable},
                         {"violated", row.violated}});
  json violations_json = json::array();
  for (const auto& v : violations) {
    json details = json::object();
    for (const auto& [key, value] : v.details) details[key] = value;
    violations_json.push_back({{"theorem", v.theorem_id},
                               {"instance_digest", v.instance_digest},
                               {"details", details}});
  }
  return json{{"rows", rows_json},
              {"violations", violations_json},
              {"total_instances", total_instances}};
}

SuiteResult run_suite(Index n_max, long trials_per_case, std::uint64_t seed, int jobs,
                      const std::optional<std::string>& only) {
  if (n_max < 1 || trials_per_case < 1)
    throw DomainError("run_suite: n_max and trials_per_case must be >= 1");
  if (only && !is_theorem_id(*only))
    throw std::invalid_argument("unknown theorem id: " + *only);

  struct Task {
    std::size_t id_index;
    Instance instance;
  };
  std::vector<Task> tasks;
  const auto& ids = theorem_ids();
  for (std::size_t idx = 0; idx < ids.size(); ++idx) {
    if (only && ids[idx] != *only) continue;
    for (Instance& w : constructed_witnesses(ids[idx], n_max))
      tasks.push_back({idx, std::move(w)});
    for (Index n = 1; n <= n_max; ++n)
      for (long trial = 0; trial < trials_per_case; ++trial)
        tasks.push_back({idx, random_instance(ids[idx], n, trial, seed)});
  }

  std::vector<TheoremReport> reports(tasks.size());
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t)
      reports[t] = check(ids[tasks[t].id_index], tasks[t].instance);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w]() {
        for (std::size_t t = static_cast<std::size_t>(w); t < tasks.size();
             t += static_cast<std::size_t>(workers))
          reports[t] = check(ids[tasks[t].id_index], tasks[t].instance);
      });
    for (auto& th : pool) th.join();
  }

  SuiteResult result;
  result.total_instances = static_cast<long>(tasks.size());
  std::map<std::size_t, SuiteRow> rows;
  for (std::size_t idx = 0; idx < ids.size(); ++idx) {
    if (only && ids[idx] != *only) continue;
    rows[idx].theorem_id = ids[idx];
  }
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    SuiteRow& row = rows[tasks[t].id_index];
    switch (reports[t].outcome) {
      case Outcome::Holds: ++row.holds; break;
      case Outcome::NotApplicable: ++row.not_applicable; break;
      case Outcome::Violated:
        ++row.violated;
        result.violations.push_back(reports[t]);
        break;
    }
  }
  for (auto& [idx, row] : rows) result.rows.push_back(std::move(row));
  return result;
}

}  // namespace semicomm
