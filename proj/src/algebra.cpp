#include "semicomm/algebra.hpp"

#include <deque>
#include <set>
#include <stdexcept>

#include "semicomm/rng.hpp"

namespace semicomm {

std::string word_label(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int g : w) {
    if (g < 26)
      s.push_back(static_cast<char>('A' + g));
    else
      s += "g" + std::to_string(g);
  }
  return s;
}

QMatrix evaluate_word(const Word& w, const std::vector<QMatrix>& generators, Index n) {
  QMatrix m = identity(n);
  for (int g : w) m = m * generators[static_cast<std::size_t>(g)];
  return m;
}

bool AlgebraBasis::contains(const QMatrix& m) const {
  RowSpan span(n * n);
  for (Index r = 0; r < rref_span.rows(); ++r) span.insert(rref_span.row(r));
  return span.contains(vectorize(m));
}

AlgebraBasis unital_algebra_basis(const std::vector<QMatrix>& generators) {
  Index n = 1;
  if (!generators.empty()) {
    n = generators.front().rows();
    for (const QMatrix& g : generators) {
      require_square(g, "unital_algebra_basis");
      if (g.rows() != n)
        throw ShapeError("unital_algebra_basis: generators must share one size");
    }
  }

  AlgebraBasis basis;
  basis.n = n;
  RowSpan span(n * n);

  std::deque<std::size_t> frontier;  // indices into basis arrays, FIFO
  span.insert(vectorize(identity(n)));
  basis.basis_words.push_back({});
  basis.basis_matrices.push_back(identity(n));
  frontier.push_back(0);

  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const QMatrix product = basis.basis_matrices[at] * generators[g];
      if (!span.insert(vectorize(product))) continue;
      Word w = basis.basis_words[at];
      w.push_back(static_cast<int>(g));
      basis.basis_words.push_back(std::move(w));
      basis.basis_matrices.push_back(product);
      frontier.push_back(basis.basis_matrices.size() - 1);
    }
  }

  basis.dim = span.rank();
  basis.rref_span = span.as_matrix();

  // Right closure holds by construction; left closure must follow since the
  // span is an algebra containing the generators. Assert it.
  for (const QMatrix& g : generators)
    for (const QMatrix& b : basis.basis_matrices)
      if (!span.contains(vectorize(g * b)))
        throw std::logic_error("unital_algebra_basis: span is not left-closed");
  return basis;
}

namespace {

// Distinct word values at each length, levels 0..max_len. Level L is built
// from level L-1 by right multiplication with e and f, deduplicated.
std::vector<std::vector<QMatrix>> word_value_levels(const QMatrix& e, const QMatrix& f,
                                                    Index max_len) {
  std::vector<std::vector<QMatrix>> levels;
  levels.push_back({identity(e.rows())});
  for (Index len = 1; len <= max_len; ++len) {
    std::set<QMatrix, MatrixLess> next;
    for (const QMatrix& w : levels.back()) {
      next.insert(w * e);
      next.insert(w * f);
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace

std::vector<Index> word_span_dims(const QMatrix& e, const QMatrix& f, Index max_len) {
  require_same_square(e, f, "word_span_dims");
  const Index n = e.rows();
  const auto levels = word_value_levels(e, f, max_len);
  RowSpan span(n * n);
  std::vector<Index> dims;
  for (const auto& level : levels) {
    for (const QMatrix& w : level) span.insert(vectorize(w));
    dims.push_back(span.rank());
  }
  return dims;
}

bool verify_lemma_gn(const QMatrix& e, const QMatrix& f, Index n) {
  require_same_square(e, f, "verify_lemma_gn");
  if (!is_idempotent(e) || !is_idempotent(f))
    throw DomainError("verify_lemma_gn: inputs must be idempotent");
  const Index size = e.rows();
  const QMatrix k = commutator(e, f);

  // Left side: span of [e,f]^j {I, e, f, ef} for j = 0..n.
  RowSpan lhs(size * size);
  std::vector<QMatrix> ladder = {identity(size), e, f, e * f};
  for (Index j = 0; j <= n; ++j) {
    for (const QMatrix& m : ladder) lhs.insert(vectorize(m));
    if (j < n)
      for (QMatrix& m : ladder) m = k * m;
  }

  // Right side: span of words up to length 2n+1 plus [e,f]^n ef.
  RowSpan rhs(size * size);
  for (const auto& level : word_value_levels(e, f, 2 * n + 1))
    for (const QMatrix& w : level) rhs.insert(vectorize(w));
  rhs.insert(vectorize(mat_pow(k, static_cast<unsigned long>(n)) * e * f));

  return lhs == rhs;
}

bool mccoy_triangularizable(const QMatrix& a, const QMatrix& b) {
  require_same_square(a, b, "mccoy_triangularizable");
  const QMatrix k = commutator(a, b);
  const AlgebraBasis basis = unital_algebra_basis({a, b});
  for (const QMatrix& w : basis.basis_matrices)
    if (!is_nilpotent(w * k)) return false;

  // Safeguard: random algebra elements must then be nilpotent too (trace
  // linearity makes the per-basis test exact); a failure here is a defect.
  SplitMix64 rng(0x5eedc0ffee123456ULL);
  const Index n = a.rows();
  for (int trial = 0; trial < 200; ++trial) {
    QMatrix w = zeros(n, n);
    for (const QMatrix& m : basis.basis_matrices)
      w += m * Rational(rng.range(-4, 4));
    if (!is_nilpotent(w * k))
      throw std::logic_error("mccoy_triangularizable: basis test passed but a combination failed");
  }
  return true;
}

std::optional<Index> commutator_nil_index(const QMatrix& a, const QMatrix& b) {
  require_same_square(a, b, "commutator_nil_index");
  const Index n = a.rows();
  const QMatrix k = commutator(a, b);
  QMatrix p = k;
  for (Index exp = 1; exp <= n; ++exp) {
    if (is_zero_matrix(p)) return exp;
    p = p * k;
  }
  return std::nullopt;
}

IdempotentRelations check_idempotent_relations(const QMatrix& e, const QMatrix& f) {
  require_same_square(e, f, "check_idempotent_relations");
  if (!is_idempotent(e))
    throw DomainError("check_idempotent_relations: e must be idempotent");
  const QMatrix ef = e * f, fe = f * e;
  const QMatrix k = ef - fe;
  IdempotentRelations rel;
  rel.efe_eq_fe = exactly_equal(e * fe, fe);
  rel.fef_eq_ef = exactly_equal(f * ef, ef);
  rel.fe_idempotent = exactly_equal(fe * fe, fe);
  rel.ef_idempotent = exactly_equal(ef * ef, ef);
  rel.comm_square_zero = is_zero_matrix(k * k);
  rel.commuting = is_zero_matrix(k);
  return rel;
}

}  // namespace semicomm
