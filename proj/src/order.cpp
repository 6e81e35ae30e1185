#include "semicomm/order.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace semicomm {

const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::Positive: return "Positive";
    case SignClass::Negative: return "Negative";
    case SignClass::Zero: return "Zero";
    case SignClass::Mixed: return "Mixed";
  }
  return "?";
}

SignClass sign_class(const QMatrix& m) {
  bool has_pos = false, has_neg = false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const int s = m(i, j).sign();
      if (s > 0) has_pos = true;
      if (s < 0) has_neg = true;
    }
  if (has_pos && has_neg) return SignClass::Mixed;
  if (has_pos) return SignClass::Positive;
  if (has_neg) return SignClass::Negative;
  return SignClass::Zero;
}

SignClass commutator_sign(const QMatrix& a, const QMatrix& b) {
  return sign_class(commutator(a, b));
}

bool is_positive_matrix(const QMatrix& m) {
  const SignClass s = sign_class(m);
  return s == SignClass::Positive || s == SignClass::Zero;
}

bool semi_commute(const QMatrix& a, const QMatrix& b) {
  return commutator_sign(a, b) != SignClass::Mixed;
}

static void require_positive(const QMatrix& m, const char* what) {
  if (!is_positive_matrix(m))
    throw DomainError(std::string(what) + ": matrix must have nonnegative entries");
}

bool is_strictly_positive(const QMatrix& m) {
  require_positive(m, "is_strictly_positive");
  for (Index j = 0; j < m.cols(); ++j) {
    bool nonzero = false;
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    if (!nonzero) return false;  // e_j is a positive kernel vector
  }
  return true;
}

namespace {

// Support digraph as adjacency lists: edge i -> j when m(i,j) > 0.
std::vector<std::vector<Index>> support_digraph(const QMatrix& m) {
  const Index n = m.rows();
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) adj[static_cast<std::size_t>(i)].push_back(j);
  return adj;
}

// Tarjan SCC; component ids are assigned in discovery order.
struct SccResult {
  std::vector<Index> component;  // vertex -> component id
  Index count = 0;
};

SccResult strongly_connected_components(const std::vector<std::vector<Index>>& adj) {
  const Index n = static_cast<Index>(adj.size());
  SccResult res;
  res.component.assign(static_cast<std::size_t>(n), -1);
  std::vector<Index> index(static_cast<std::size_t>(n), -1),
      lowlink(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<Index> stack;
  Index next_index = 0;

  // Iterative Tarjan to be safe for any n.
  struct Frame {
    Index v;
    std::size_t edge;
  };
  for (Index root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> call;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const auto v = static_cast<std::size_t>(f.v);
      if (f.edge == 0) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(f.v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (f.edge < adj[v].size()) {
        const Index w = adj[v][f.edge++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[wi]) lowlink[v] = std::min(lowlink[v], index[wi]);
      }
      if (descended) continue;
      if (lowlink[v] == index[v]) {
        while (true) {
          const Index w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          res.component[static_cast<std::size_t>(w)] = res.count;
          if (w == f.v) break;
        }
        ++res.count;
      }
      call.pop_back();
      if (!call.empty()) {
        const auto pv = static_cast<std::size_t>(call.back().v);
        lowlink[pv] = std::min(lowlink[pv], lowlink[v]);
      }
    }
  }
  return res;
}

bool entrywise_strictly_positive(const QMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j).sign() <= 0) return false;
  return true;
}

}  // namespace

bool is_ideal_irreducible(const QMatrix& m) {
  require_square(m, "is_ideal_irreducible");
  require_positive(m, "is_ideal_irreducible");
  const Index n = m.rows();
  const bool by_scc = strongly_connected_components(support_digraph(m)).count == 1;
  const bool by_power =
      entrywise_strictly_positive(mat_pow(identity(n) + m, static_cast<unsigned long>(n - 1)));
  if (by_scc != by_power)
    throw std::logic_error("is_ideal_irreducible: SCC and (I+m)^(n-1) criteria disagree");
  return by_scc;
}

QMatrix permutation_matrix(const std::vector<Index>& perm) {
  const Index n = static_cast<Index>(perm.size());
  QMatrix p = QMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = Rational(1);
  return p;
}

IdealChain invariant_ideal_chain(const QMatrix& m) {
  require_square(m, "invariant_ideal_chain");
  require_positive(m, "invariant_ideal_chain");
  const Index n = m.rows();
  const auto adj = support_digraph(m);
  const SccResult scc = strongly_connected_components(adj);
  const auto k = static_cast<std::size_t>(scc.count);

  std::vector<std::vector<Index>> members(k);
  for (Index v = 0; v < n; ++v)
    members[static_cast<std::size_t>(scc.component[static_cast<std::size_t>(v)])].push_back(v);

  // Condensation edges and indegrees. Edge c(u) -> c(v) must place c(u)
  // before c(v) so the permuted matrix is block upper-triangular.
  std::vector<std::vector<Index>> out(k);
  std::vector<Index> indegree(k, 0);
  for (Index u = 0; u < n; ++u)
    for (Index v : adj[static_cast<std::size_t>(u)]) {
      const Index cu = scc.component[static_cast<std::size_t>(u)];
      const Index cv = scc.component[static_cast<std::size_t>(v)];
      if (cu != cv) out[static_cast<std::size_t>(cu)].push_back(cv);
    }
  for (auto& edges : out) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (Index target : edges) ++indegree[static_cast<std::size_t>(target)];
  }

  // Kahn topological order; ties broken by smallest original vertex index.
  std::priority_queue<std::pair<Index, Index>, std::vector<std::pair<Index, Index>>,
                      std::greater<>>
      ready;  // (min original index, component id)
  for (std::size_t c = 0; c < k; ++c)
    if (indegree[c] == 0) ready.emplace(members[c].front(), static_cast<Index>(c));

  IdealChain chain;
  chain.permutation.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const Index c = ready.top().second;
    ready.pop();
    const auto& verts = members[static_cast<std::size_t>(c)];
    for (Index v : verts) chain.permutation.push_back(v);
    chain.block_sizes.push_back(static_cast<Index>(verts.size()));
    for (Index next : out[static_cast<std::size_t>(c)])
      if (--indegree[static_cast<std::size_t>(next)] == 0)
        ready.emplace(members[static_cast<std::size_t>(next)].front(), next);
  }
  if (static_cast<Index>(chain.permutation.size()) != n)
    throw std::logic_error("invariant_ideal_chain: topological sort failed");
  return chain;
}

bool is_ideal_triangularizable(const QMatrix& m) {
  const IdealChain chain = invariant_ideal_chain(m);
  return std::all_of(chain.block_sizes.begin(), chain.block_sizes.end(),
                     [](Index s) { return s == 1; });
}

Index refined_bound(const QMatrix& a, const QMatrix& b) {
  require_same_square(a, b, "refined_bound");
  if (!is_positive_matrix(a) || !is_positive_matrix(b))
    throw DomainError("refined_bound: both matrices must have nonnegative entries");
  const IdealChain chain = invariant_ideal_chain(a + b);
  Index bound = a.rows();
  const auto& sizes = chain.block_sizes;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) bound += sizes[i] * sizes[j];
  return bound;
}

}  // namespace semicomm
