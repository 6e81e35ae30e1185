#include "semicomm/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "semicomm/order.hpp"

namespace semicomm {

QMatrix jordan_block(Index n) {
  if (n < 1) throw DomainError("jordan_block: n must be >= 1");
  QMatrix j = QMatrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) j(i, i + 1) = Rational(1);
  return j;
}

QMatrix cycle(Index n) {
  if (n < 1) throw DomainError("cycle: n must be >= 1");
  QMatrix c = QMatrix::Zero(n, n);
  for (Index j = 1; j < n; ++j) c(j - 1, j) = Rational(1);  // C e_j = e_{j-1}
  c(n - 1, 0) = Rational(1);                                // C e_1 = e_n
  return c;
}

Index CompanionSpec::zero_multiplicity() const {
  Index k = 0;
  while (k < static_cast<Index>(coefficients.size()) &&
         coefficients[static_cast<std::size_t>(k)].is_zero())
    ++k;
  return k;
}

QMatrix companion(const CompanionSpec& spec) {
  const Index n = static_cast<Index>(spec.coefficients.size());
  if (n < 1) throw DomainError("companion: need at least one coefficient");
  QMatrix a = QMatrix::Zero(n, n);
  for (Index i = 0; i + 1 < n; ++i) a(i, i + 1) = Rational(1);
  for (Index j = 0; j < n; ++j) a(n - 1, j) = spec.coefficients[static_cast<std::size_t>(j)];
  return a;
}

std::optional<CompanionSpec> as_companion(const QMatrix& m) {
  if (!is_square(m)) return std::nullopt;
  const Index n = m.rows();
  for (Index i = 0; i + 1 < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const bool super = (j == i + 1);
      if (super && m(i, j) != Rational(1)) return std::nullopt;
      if (!super && !m(i, j).is_zero()) return std::nullopt;
    }
  CompanionSpec spec;
  for (Index j = 0; j < n; ++j) spec.coefficients.push_back(m(n - 1, j));
  return spec;
}

QMatrix permutation_from_cycle_type(const std::vector<Index>& sizes) {
  if (sizes.empty()) throw DomainError("permutation_from_cycle_type: empty cycle type");
  Index n = 0;
  for (Index s : sizes) {
    if (s < 1) throw DomainError("permutation_from_cycle_type: cycle sizes must be >= 1");
    n += s;
  }
  QMatrix p = QMatrix::Zero(n, n);
  Index at = 0;
  for (Index s : sizes) {
    p.block(at, at, s, s) = cycle(s);
    at += s;
  }
  return p;
}

bool is_permutation_matrix(const QMatrix& m) {
  if (!is_square(m)) return false;
  const Index n = m.rows();
  for (Index i = 0; i < n; ++i) {
    Index row_ones = 0;
    for (Index j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      if (m(i, j) != Rational(1)) return false;
      ++row_ones;
    }
    if (row_ones != 1) return false;
  }
  for (Index j = 0; j < n; ++j) {
    Index col_ones = 0;
    for (Index i = 0; i < n; ++i)
      if (!m(i, j).is_zero()) ++col_ones;
    if (col_ones != 1) return false;
  }
  return true;
}

std::pair<QMatrix, QMatrix> gerstenhaber_witness(Index n) {
  if (n < 1) throw DomainError("gerstenhaber_witness: n must be >= 1");
  QMatrix b = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) b(i, i) = Rational(static_cast<long>(i + 1));
  return {jordan_block(n), b};
}

std::vector<QMatrix> intertwiner_basis(Index m, Index n) {
  if (m < 1 || n < 1) throw DomainError("intertwiner_basis: sizes must be >= 1");
  const Index d = std::gcd(m, n);
  const Index v = std::lcm(m, n);
  std::vector<QMatrix> basis;
  basis.reserve(static_cast<std::size_t>(d));
  for (Index j = 1; j <= d; ++j) {
    QMatrix u = QMatrix::Zero(m, n);
    for (Index x = 1; x <= v; ++x) {
      const Index row = x % m;                // 1-based (1+x mod m), shifted to 0-based
      const Index col = (j - 1 + x) % n;      // 1-based (j+x mod n), shifted to 0-based
      u(row, col) = Rational(1);
    }
    basis.push_back(std::move(u));
  }
  return basis;
}

bool verify_intertwiner_structure(const QMatrix& a, Index m, Index n) {
  if (a.rows() != m || a.cols() != n)
    throw ShapeError("verify_intertwiner_structure: matrix is not m x n");
  bool toeplitz = true;
  for (Index i = 0; i < m && toeplitz; ++i)
    for (Index j = 0; j < n; ++j)
      if (a(i, (j + n - 1) % n) != a((i + 1) % m, j)) {
        toeplitz = false;
        break;
      }
  const bool intertwines = exactly_equal(cycle(m) * a, a * cycle(n));
  if (toeplitz != intertwines)
    throw std::logic_error("verify_intertwiner_structure: criteria disagree");
  return toeplitz;
}

IdempotentPair idempotent_pair_7x7() {
  IdempotentPair p;
  p.e = make_matrix({{1, 0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 1, 0}});
  p.f = make_matrix({{0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 0, 0, 0, 0},
                     {0, 0, 0, 1, 1, 1, 0},
                     {0, 0, 0, 0, 0, 0, 1}});
  p.provenance = "example_7x7";
  return p;
}

IdempotentPair idempotent_pair_3x3() {
  IdempotentPair p;
  p.e = make_matrix({{0, 1, 0}, {0, 1, 0}, {0, 0, 0}});
  p.f = make_matrix({{0, 0, 0}, {0, 1, 1}, {0, 0, 0}});
  p.provenance = "example_3x3";
  return p;
}

Rational catalan_number(Index j) {
  if (j < 0) throw DomainError("catalan_number: j must be >= 0");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * j),
               static_cast<unsigned long>(j));
  return Rational(mpq_class(binom, mpz_class(static_cast<long>(j + 1))));
}

IdempotentPair catalan_idempotent_pair(Index n) {
  if (n < 1) throw DomainError("catalan_idempotent_pair: n must be >= 1");
  QMatrix e = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; i += 2) e(i, i) = Rational(1);

  QMatrix f = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; i += 2) f(i, i) = Rational(1);
  for (Index i = 0; i + 1 < n; ++i) f(i, i + 1) = Rational(1);
  // 2j-th super-diagonal: alternating signed Catalan numbers, starting
  // negative on the first row.
  for (Index j = 1; 2 * j <= n - 1; ++j) {
    const Rational c = catalan_number(j - 1);
    for (Index i = 0; i + 2 * j < n; ++i)
      f(i, i + 2 * j) = (i % 2 == 0) ? -c : c;  // 1-based row odd -> negative
  }
  return IdempotentPair{std::move(e), std::move(f), "catalan(" + std::to_string(n) + ")"};
}

namespace {

bool is_diagonal(const QMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

IdempotentDiagonalization diagonalize_idempotent(const QMatrix& e, const QMatrix& f) {
  require_same_square(e, f, "diagonalize_idempotent");
  if (!is_upper_triangular(e) || !is_upper_triangular(f))
    throw DomainError("diagonalize_idempotent: inputs must be upper-triangular");
  if (!is_idempotent(e)) throw DomainError("diagonalize_idempotent: e must be idempotent");
  const Index n = e.rows();

  // Maximal runs of equal diagonal values; values alternate between runs.
  std::vector<Index> run_start, run_size;
  for (Index i = 0; i < n; ++i) {
    if (i == 0 || e(i, i) != e(i - 1, i - 1)) {
      run_start.push_back(i);
      run_size.push_back(1);
    } else {
      ++run_size.back();
    }
  }
  const Index t = static_cast<Index>(run_start.size());

  QMatrix p_total = identity(n);
  if (t > 1) {
    // Work on whichever of e, I-e has an identity leading block; a change of
    // basis diagonalizes one iff it diagonalizes the other.
    QMatrix g = (e(0, 0) == Rational(1)) ? e : QMatrix(identity(n) - e);
    for (Index round = 0; !is_diagonal(g); ++round) {
      if (round > t)
        throw std::logic_error("diagonalize_idempotent: did not converge");
      const Index offset = 2 * round + 1;  // block super-diagonal killed this round
      QMatrix nil = QMatrix::Zero(n, n);
      for (Index bi = 0; bi + offset < t; ++bi) {
        const Index bj = bi + offset;
        const Rational sign = (bi % 2 == 0) ? Rational(1) : Rational(-1);
        for (Index r = 0; r < run_size[static_cast<std::size_t>(bi)]; ++r)
          for (Index c = 0; c < run_size[static_cast<std::size_t>(bj)]; ++c) {
            const Index row = run_start[static_cast<std::size_t>(bi)] + r;
            const Index col = run_start[static_cast<std::size_t>(bj)] + c;
            nil(row, col) = sign * g(row, col);
          }
      }
      const QMatrix p = identity(n) + nil;
      g = p * g * inverse(p);
      p_total = p * p_total;
    }
  }

  IdempotentDiagonalization result;
  const QMatrix p_inv = inverse(p_total);
  result.p = p_total;
  result.e_diag = p_total * e * p_inv;
  result.f_upper = p_total * f * p_inv;
  if (!is_diagonal(result.e_diag) || !is_upper_triangular(result.f_upper) ||
      !is_upper_triangular(result.p))
    throw std::logic_error("diagonalize_idempotent: postcondition failed");
  for (Index i = 0; i < n; ++i)
    if (result.e_diag(i, i) != e(i, i))
      throw std::logic_error("diagonalize_idempotent: diagonal changed");
  return result;
}

const char* to_string(PairFamily f) {
  switch (f) {
    case PairFamily::DiagDominated: return "diag_dominated";
    case PairFamily::CommutingPoly: return "commuting_poly";
    case PairFamily::BlockChain: return "block_chain";
    case PairFamily::RankOneIdempotents: return "rank_one_idempotents";
  }
  return "?";
}

std::optional<PairFamily> pair_family_from_string(const std::string& name) {
  for (PairFamily f : all_pair_families())
    if (name == to_string(f)) return f;
  return std::nullopt;
}

const std::vector<PairFamily>& all_pair_families() {
  static const std::vector<PairFamily> families = {
      PairFamily::DiagDominated, PairFamily::CommutingPoly, PairFamily::BlockChain,
      PairFamily::RankOneIdempotents};
  return families;
}

QMatrix random_positive_matrix_rect(Index rows, Index cols, SplitMix64& rng,
                                    unsigned density_pct, long max_entry) {
  QMatrix m = QMatrix::Zero(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      if (rng.chance(density_pct)) m(i, j) = Rational(rng.range(1, max_entry));
  return m;
}

QMatrix random_positive_matrix(Index n, SplitMix64& rng, unsigned density_pct,
                               long max_entry) {
  return random_positive_matrix_rect(n, n, rng, density_pct, max_entry);
}

QMatrix random_irreducible_positive(Index n, SplitMix64& rng) {
  QMatrix c = cycle(n);
  QMatrix a = c * Rational(rng.range(1, 3));  // cycle support keeps it irreducible
  QMatrix power = identity(n);
  for (Index j = 0; j + 1 < n; ++j) {
    power = power * c;
    if (j > 0 && rng.chance(40)) a += power * Rational(rng.range(1, 2));
  }
  if (rng.chance(30)) a += identity(n) * Rational(rng.range(1, 2));
  return a;
}

QMatrix random_intertwiner_combination(Index m, Index n, SplitMix64& rng) {
  QMatrix a = QMatrix::Zero(m, n);
  for (const QMatrix& u : intertwiner_basis(m, n))
    if (rng.chance(70)) a += u * Rational(rng.range(0, 3));
  return a;
}

std::vector<Index> random_cycle_type(Index n, SplitMix64& rng) {
  std::vector<Index> sizes;
  Index left = n;
  while (left > 0) {
    const Index s = static_cast<Index>(rng.range(1, static_cast<long>(left)));
    sizes.push_back(s);
    left -= s;
  }
  return sizes;
}

QMatrix random_permutation(Index n, SplitMix64& rng) {
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  for (Index i = n - 1; i > 0; --i)
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
  return permutation_matrix(perm);
}

QMatrix random_unit_upper_triangular(Index n, SplitMix64& rng, long max_entry) {
  QMatrix t = identity(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (rng.chance(50)) t(i, j) = Rational(rng.range(-max_entry, max_entry));
  return t;
}

QMatrix random_triangular_idempotent(Index n, SplitMix64& rng) {
  QMatrix d = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (rng.chance(50)) d(i, i) = Rational(1);
  const QMatrix t = random_unit_upper_triangular(n, rng);
  return t * d * inverse(t);
}

QMatrix random_general_idempotent(Index n, SplitMix64& rng) {
  QMatrix d = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (rng.chance(50)) d(i, i) = Rational(1);
  QMatrix lower = identity(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j)
      if (rng.chance(40)) lower(i, j) = Rational(rng.range(-2, 2));
  const QMatrix s = lower * random_unit_upper_triangular(n, rng);
  return s * d * inverse(s);
}

namespace {

// Sparse positive vector (n x 1) with a prescribed support size.
QMatrix sparse_positive_vector(Index n, SplitMix64& rng, const std::vector<Index>& support,
                               long max_entry = 3) {
  QMatrix v = QMatrix::Zero(n, 1);
  for (Index i : support) v(i, 0) = Rational(rng.range(1, max_entry));
  return v;
}

std::vector<Index> random_support(Index n, SplitMix64& rng, Index min_size = 1) {
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  for (Index i = n - 1; i > 0; --i)
    std::swap(all[static_cast<std::size_t>(i)], all[rng.below(static_cast<std::uint64_t>(i + 1))]);
  const Index size = static_cast<Index>(rng.range(static_cast<long>(min_size), static_cast<long>(n)));
  all.resize(static_cast<std::size_t>(size));
  std::sort(all.begin(), all.end());
  return all;
}

QMatrix rank_one_idempotent(const QMatrix& x, const QMatrix& a) {
  Rational dot(0);
  for (Index i = 0; i < x.rows(); ++i) dot += a(i, 0) * x(i, 0);
  return (x * a.transpose()) * (Rational(1) / dot);
}

}  // namespace

QMatrix random_rank_one_positive_idempotent(Index n, SplitMix64& rng) {
  const auto sx = random_support(n, rng);
  auto sa = random_support(n, rng);
  // Force a^T x > 0 by sharing one index.
  if (std::find_first_of(sa.begin(), sa.end(), sx.begin(), sx.end()) == sa.end()) {
    sa.push_back(sx[rng.below(sx.size())]);
    std::sort(sa.begin(), sa.end());
  }
  return rank_one_idempotent(sparse_positive_vector(n, rng, sx),
                             sparse_positive_vector(n, rng, sa));
}

IdempotentPair random_positive_semicommuting_idempotents(Index n, SplitMix64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    IdempotentPair pair;
    pair.provenance = "random";
    const long variant = (n >= 2) ? rng.range(0, 3) : 1;
    if (variant == 0) {
      // Rank-one pieces with supp(b) disjoint from supp(x): then fe = 0 and
      // ef - fe = ef >= 0.
      const auto sx = random_support(n, rng);
      std::vector<Index> rest;
      for (Index i = 0; i < n; ++i)
        if (std::find(sx.begin(), sx.end(), i) == sx.end()) rest.push_back(i);
      if (rest.empty()) continue;
      for (Index i = rest.size() > 1 ? static_cast<Index>(rest.size()) - 1 : 0; i > 0; --i)
        std::swap(rest[static_cast<std::size_t>(i)],
                  rest[rng.below(static_cast<std::uint64_t>(i + 1))]);
      const Index keep = static_cast<Index>(rng.range(1, static_cast<long>(rest.size())));
      std::vector<Index> sb(rest.begin(), rest.begin() + keep);
      std::sort(sb.begin(), sb.end());
      auto sa = random_support(n, rng);
      if (std::find_first_of(sa.begin(), sa.end(), sx.begin(), sx.end()) == sa.end()) {
        sa.push_back(sx[rng.below(sx.size())]);
        std::sort(sa.begin(), sa.end());
      }
      auto sy = random_support(n, rng);
      if (std::find_first_of(sy.begin(), sy.end(), sb.begin(), sb.end()) == sy.end()) {
        sy.push_back(sb[rng.below(sb.size())]);
        std::sort(sy.begin(), sy.end());
      }
      pair.e = rank_one_idempotent(sparse_positive_vector(n, rng, sx),
                                   sparse_positive_vector(n, rng, sa));
      pair.f = rank_one_idempotent(sparse_positive_vector(n, rng, sy),
                                   sparse_positive_vector(n, rng, sb));
    } else if (variant == 1) {
      // Commuting 0/1 diagonal idempotents.
      pair.e = QMatrix::Zero(n, n);
      pair.f = QMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i) {
        if (rng.chance(50)) pair.e(i, i) = Rational(1);
        if (rng.chance(50)) pair.f(i, i) = Rational(1);
      }
    } else if (variant == 2 || n < 3) {
      // The 2x2 pattern embedded at a random offset.
      pair.e = QMatrix::Zero(n, n);
      pair.f = QMatrix::Zero(n, n);
      const Index at = static_cast<Index>(rng.range(0, static_cast<long>(n - 2)));
      pair.e.block(at, at, 2, 2) = make_matrix({{1, 0}, {0, 0}});
      pair.f.block(at, at, 2, 2) = make_matrix({{1, 1}, {0, 0}});
      for (Index i = 0; i < n; ++i)
        if (i < at || i >= at + 2) {
          if (rng.chance(40)) pair.e(i, i) = Rational(1);
          if (rng.chance(40)) pair.f(i, i) = pair.e(i, i);
        }
    } else {
      // The 3x3 pattern embedded at a random offset.
      pair.e = QMatrix::Zero(n, n);
      pair.f = QMatrix::Zero(n, n);
      const Index at = static_cast<Index>(rng.range(0, static_cast<long>(n - 3)));
      const IdempotentPair small = idempotent_pair_3x3();
      pair.e.block(at, at, 3, 3) = small.e;
      pair.f.block(at, at, 3, 3) = small.f;
      for (Index i = 0; i < n; ++i)
        if (i < at || i >= at + 3) {
          if (rng.chance(40)) pair.e(i, i) = Rational(1);
          if (rng.chance(40)) pair.f(i, i) = pair.e(i, i);
        }
    }
    // Random permutation similarity for variety; preserves everything.
    const QMatrix p = random_permutation(n, rng);
    pair.e = p.transpose() * pair.e * p;
    pair.f = p.transpose() * pair.f * p;

    if (!is_idempotent(pair.e) || !is_idempotent(pair.f)) continue;
    const SignClass s = commutator_sign(pair.e, pair.f);
    if (s == SignClass::Positive || s == SignClass::Zero) return pair;
  }
  throw GenerationError("random_positive_semicommuting_idempotents: retries exhausted");
}

std::pair<QMatrix, QMatrix> random_semicommuting_pair(Index n, PairFamily family,
                                                      std::uint64_t seed) {
  if (n < 1) throw DomainError("random_semicommuting_pair: n must be >= 1");
  SplitMix64 rng(mix_keys({seed, key_of(to_string(family)), static_cast<std::uint64_t>(n)}));

  switch (family) {
    case PairFamily::DiagDominated: {
      std::vector<long> diag(static_cast<std::size_t>(n));
      for (auto& d : diag) d = rng.range(0, 6);
      std::sort(diag.begin(), diag.end());
      QMatrix b = QMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i) b(i, i) = Rational(diag[static_cast<std::size_t>(i)]);
      QMatrix a = QMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (diag[static_cast<std::size_t>(j)] >= diag[static_cast<std::size_t>(i)] &&
              rng.chance(50))
            a(i, j) = Rational(rng.range(0, 3));
      return {a, b};
    }
    case PairFamily::CommutingPoly: {
      const QMatrix a = random_positive_matrix(n, rng);
      const long deg = rng.range(1, 3);
      QMatrix b = QMatrix::Zero(n, n);
      QMatrix power = identity(n);
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
      return {a, b};
    }
    case PairFamily::BlockChain: {
      const std::vector<Index> sizes = random_cycle_type(n, rng);
      const std::size_t k = sizes.size();
      std::vector<long> betas(k);
      for (auto& beta : betas) beta = rng.range(0, 6);
      std::sort(betas.begin(), betas.end());

      QMatrix a = QMatrix::Zero(n, n);
      QMatrix b = QMatrix::Zero(n, n);
      Index row_at = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const Index ni = sizes[i];
        SplitMix64 block_rng(rng.next());
        a.block(row_at, row_at, ni, ni) = random_positive_matrix(ni, block_rng);
        b.block(row_at, row_at, ni, ni) = identity(ni) * Rational(betas[i]);
        Index col_at = row_at + ni;
        for (std::size_t j = i + 1; j < k; ++j) {
          const Index nj = sizes[j];
          for (Index r = 0; r < ni; ++r)
            for (Index c = 0; c < nj; ++c)
              if (rng.chance(40)) a(row_at + r, col_at + c) = Rational(rng.range(1, 2));
          col_at += nj;
        }
        row_at += ni;
      }
      return {a, b};
    }
    case PairFamily::RankOneIdempotents: {
      for (int attempt = 0; attempt < 10000; ++attempt) {
        const auto sx = random_support(n, rng);
        auto sa = random_support(n, rng);
        if (std::find_first_of(sa.begin(), sa.end(), sx.begin(), sx.end()) == sa.end()) {
          sa.push_back(sx[rng.below(sx.size())]);
          std::sort(sa.begin(), sa.end());
        }
        std::vector<Index> sb;
        if (n >= 2 && rng.chance(60)) {
          // Disjoint from supp(x): guarantees fe = 0, hence ef - fe >= 0.
          for (Index i = 0; i < n; ++i)
            if (std::find(sx.begin(), sx.end(), i) == sx.end() && rng.chance(60))
              sb.push_back(i);
        }
        if (sb.empty()) sb = random_support(n, rng);
        auto sy = random_support(n, rng);
        if (std::find_first_of(sy.begin(), sy.end(), sb.begin(), sb.end()) == sy.end()) {
          sy.push_back(sb[rng.below(sb.size())]);
          std::sort(sy.begin(), sy.end());
        }
        const QMatrix e = rank_one_idempotent(sparse_positive_vector(n, rng, sx),
                                              sparse_positive_vector(n, rng, sa));
        const QMatrix f = rank_one_idempotent(sparse_positive_vector(n, rng, sy),
                                              sparse_positive_vector(n, rng, sb));
        const SignClass s = commutator_sign(e, f);
        if (s == SignClass::Positive || s == SignClass::Zero) return {e, f};
      }
      throw GenerationError("random_semicommuting_pair: rank_one_idempotents retries exhausted");
    }
  }
  throw DomainError("random_semicommuting_pair: unknown family");
}

}  // namespace semicomm
