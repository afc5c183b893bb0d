#include "treepoly/invariants.hpp"

#include <functional>
#include <utility>

#include "treepoly/errors.hpp"

namespace treepoly {

const MultiPoly& Invariants::P(const RootedTree& t) {
  auto it = p_cache_.find(t.encoding());
  if (it != p_cache_.end()) return it->second;
  MultiPoly value;
  if (t.is_leaf()) {
    // 1 + x*y
    value = MultiPoly::one() + MultiPoly::monomial(1, 1, 1, 0);
  } else {
    MultiPoly prod = MultiPoly::one();
    for (const RootedTree& c : t.children()) prod *= P(c);
    const MultiPoly x = MultiPoly::variable(Var::x);
    value = MultiPoly::one() - x + x * prod;
  }
  return p_cache_.emplace(t.encoding(), std::move(value)).first->second;
}

MultiPoly Invariants::P(const RootedForest& f) {
  MultiPoly prod = MultiPoly::one();
  for (const RootedTree& t : f.trees()) prod *= P(t);
  return prod;
}

const MultiPoly& Invariants::S(const RootedTree& t) {
  auto it = s_cache_.find(t.encoding());
  if (it != s_cache_.end()) return it->second;
  MultiPoly prod = MultiPoly::one();
  for (const RootedTree& c : t.children()) prod *= S(c);
  MultiPoly value = MultiPoly::variable(Var::y) + MultiPoly::variable(Var::x) * prod;
  return s_cache_.emplace(t.encoding(), std::move(value)).first->second;
}

MultiPoly Invariants::S(const RootedForest& f) {
  MultiPoly prod = MultiPoly::one();
  for (const RootedTree& t : f.trees()) prod *= S(t);
  return prod;
}

const MultiPoly& Invariants::A(const RootedTree& t) {
  auto it = a_cache_.find(t.encoding());
  if (it != a_cache_.end()) return it->second;
  MultiPoly value;
  if (t.is_leaf()) {
    value = MultiPoly::variable(Var::y);
  } else {
    MultiPoly prod = MultiPoly::one();
    for (const RootedTree& c : t.children()) prod *= A(c);
    value = MultiPoly::variable(Var::y) + MultiPoly::variable(Var::x) * prod;
  }
  return a_cache_.emplace(t.encoding(), std::move(value)).first->second;
}

MultiPoly Invariants::A(const RootedForest& f) {
  MultiPoly prod = MultiPoly::one();
  for (const RootedTree& t : f.trees()) prod *= A(t);
  return prod;
}

const MultiPoly& Invariants::p(const RootedTree& t) {
  auto it = little_p_cache_.find(t.encoding());
  if (it != little_p_cache_.end()) return it->second;
  MultiPoly value;
  const MultiPoly x = MultiPoly::variable(Var::x);
  if (t.is_leaf()) {
    value = x;
  } else {
    MultiPoly prod = MultiPoly::one();
    for (const RootedTree& c : t.children()) {
      prod *= MultiPoly::one() - p(c);
    }
    value = x * (MultiPoly::one() - prod);
  }
  return little_p_cache_.emplace(t.encoding(), std::move(value)).first->second;
}

const MultiPoly& Invariants::M(const RootedTree& t) {
  auto it = m_cache_.find(t.encoding());
  if (it != m_cache_.end()) return it->second;
  MultiPoly value;
  if (t.is_leaf()) {
    value = MultiPoly::one();
  } else {
    // p_T(z)/z; exact because p_T has no constant term.
    value = p(t).substituted({{Var::x, MultiPoly::variable(Var::z)}})
                .divided_by(Var::z);
    const auto& branches = t.children();
    const std::size_t r = branches.size();
    // prefix[i] = prod_{j<i} A_j, suffix[i] = prod_{j>i} A_j
    std::vector<MultiPoly> prefix(r + 1, MultiPoly::one());
    std::vector<MultiPoly> suffix(r + 1, MultiPoly::one());
    for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = prefix[i] * A(branches[i]);
    for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] * A(branches[i]);
    MultiPoly sum;
    for (std::size_t i = 0; i < r; ++i) {
      sum += M(branches[i]) * prefix[i] * suffix[i + 1];
    }
    value += MultiPoly::variable(Var::x) * sum;
  }
  return m_cache_.emplace(t.encoding(), std::move(value)).first->second;
}

UniRatPoly Invariants::pgf(const RootedTree& t) {
  const MultiPoly z = MultiPoly::variable(Var::z);
  const MultiPoly integrand = M(t).substituted(
      {{Var::x, MultiPoly::variable(Var::x) * z},
       {Var::y, MultiPoly::one() - z}});
  return integrate_unit_interval(integrand);
}

MultiPoly brute_P(const RootedForest& f) {
  const FlatForest flat = FlatForest::of(f);
  const int n_leaves = static_cast<int>(flat.leaves.size());
  if (n_leaves > 30) {
    throw DomainError("brute_P: " + std::to_string(n_leaves) +
                      " leaves exceeds the enumeration bound of 30");
  }
  MultiPoly total;
  std::vector<char> marked(flat.size(), 0);
  for (std::uint32_t mask = 0; mask < (1u << n_leaves); ++mask) {
    std::fill(marked.begin(), marked.end(), 0);
    int vertices = 0;
    int chosen = 0;
    for (int b = 0; b < n_leaves; ++b) {
      if (!(mask & (1u << b))) continue;
      ++chosen;
      for (int v = flat.leaves[b]; v != -1 && !marked[v]; v = flat.parent[v]) {
        marked[v] = 1;
        ++vertices;
      }
    }
    total += MultiPoly::monomial(1, vertices, chosen, 0);
  }
  return total;
}

MultiPoly brute_P(const RootedTree& t) { return brute_P(RootedForest({t})); }

namespace {

// Calls visit(included, size) for every nonempty connected root-containing
// vertex set, deciding vertices in pre-order (a vertex may join only if its
// parent already has).
void for_each_root_subtree(
    const FlatForest& flat,
    const std::function<void(const std::vector<char>&, int)>& visit) {
  const int n = flat.size();
  std::vector<char> included(n, 0);
  included[0] = 1;
  std::function<void(int, int)> walk = [&](int next, int size) {
    if (next == n) {
      visit(included, size);
      return;
    }
    if (!included[flat.parent[next]]) {
      walk(next + 1, size);
      return;
    }
    walk(next + 1, size);
    included[next] = 1;
    walk(next + 1, size + 1);
    included[next] = 0;
  };
  walk(1, 1);
}

int boundary_count(const FlatForest& flat, const std::vector<char>& included) {
  int count = 0;
  for (int v = 1; v < flat.size(); ++v) {
    if (!included[v] && included[flat.parent[v]]) ++count;
  }
  return count;
}

MultiPoly brute_subtree_sum(const RootedTree& t, bool admissible_only) {
  if (t.vertex_count() > 20) {
    throw DomainError("brute subtree enumeration: " +
                      std::to_string(t.vertex_count()) +
                      " vertices exceeds the bound of 20");
  }
  const FlatForest flat = FlatForest::of(t);
  // The empty subtree, with boundary {root}.
  MultiPoly total = MultiPoly::variable(Var::y);
  for_each_root_subtree(flat, [&](const std::vector<char>& included, int size) {
    if (admissible_only) {
      for (int leaf : flat.leaves) {
        if (included[leaf]) return;
      }
    }
    total += MultiPoly::monomial(1, size, boundary_count(flat, included), 0);
  });
  return total;
}

}  // namespace

MultiPoly brute_S(const RootedTree& t) { return brute_subtree_sum(t, false); }

MultiPoly brute_A(const RootedTree& t) { return brute_subtree_sum(t, true); }

MultiPoly brute_M(const RootedTree& t) {
  if (t.vertex_count() > 16) {
    throw DomainError("brute_M: " + std::to_string(t.vertex_count()) +
                      " vertices exceeds the bound of 16");
  }
  const FlatForest flat = FlatForest::of(t);
  const int n = flat.size();

  // q[v] = p(fringe at v)(z) / z, computed once per vertex.
  Invariants inv;
  std::vector<MultiPoly> q(n);
  for (int v = 0; v < n; ++v) {
    q[v] = inv.p(fringe_subtree(t, v))
               .substituted({{Var::x, MultiPoly::variable(Var::z)}})
               .divided_by(Var::z);
  }

  // The empty subtree: x^0 y^0 * q[root].
  MultiPoly total = q[0];
  for_each_root_subtree(flat, [&](const std::vector<char>& included, int size) {
    for (int leaf : flat.leaves) {
      if (included[leaf]) return;
    }
    MultiPoly boundary_sum;
    int boundary = 0;
    for (int v = 1; v < n; ++v) {
      if (!included[v] && included[flat.parent[v]]) {
        boundary_sum += q[v];
        ++boundary;
      }
    }
    total += MultiPoly::monomial(1, size, boundary - 1, 0) * boundary_sum;
  });
  return total;
}

MultiPoly p_from_P(const MultiPoly& P) {
  return MultiPoly::one() -
         P.substituted({{Var::y, MultiPoly::constant(-1)}});
}

BigInt stem_from_P(const MultiPoly& P) {
  const MultiPoly value = P.derivative(Var::x).substituted(
      {{Var::x, MultiPoly::one()}, {Var::y, MultiPoly::constant(-1)}});
  return -value.constant_value();
}

bool eisenstein_check(const RootedForest& f) {
  Invariants inv;
  const MultiPoly S = inv.S(f);
  const int n = S.degree(Var::x);
  if (n <= 0) return false;  // empty forest: S = 1
  if (S.coefficient_of(Var::x, n) != MultiPoly::one()) return false;
  for (int i = 0; i < n; ++i) {
    const MultiPoly a_i = S.coefficient_of(Var::x, i);
    if (!a_i.coefficient_of(Var::y, 0).is_zero()) return false;
  }
  return S.coefficient_of(Var::x, 0) == MultiPoly::variable(Var::y);
}

bool eisenstein_check(const RootedTree& t) {
  return eisenstein_check(RootedForest({t}));
}

bool IdentityReport::all_pass() const {
  for (const IdentityCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

IdentityReport check_identities(const RootedTree& t) {
  Invariants inv;
  return check_identities(t, inv);
}

IdentityReport check_identities(const RootedTree& t, Invariants& inv) {
  IdentityReport report;
  report.tree = t.encoding();

  const MultiPoly& P = inv.P(t);
  const MultiPoly& A = inv.A(t);
  const MultiPoly& M = inv.M(t);
  const MultiPoly& p = inv.p(t);
  const TreeStats stats = tree_stats(t);

  auto expect = [&](std::string name, const MultiPoly& lhs,
                    const MultiPoly& rhs) {
    IdentityCheck check;
    check.name = std::move(name);
    check.pass = (lhs == rhs);
    if (!check.pass) {
      check.lhs = lhs.str();
      check.rhs = rhs.str();
    }
    report.checks.push_back(std::move(check));
  };

  expect("M(x,y,1) = dA/dy",
         M.substituted({{Var::z, MultiPoly::one()}}), A.derivative(Var::y));

  const MultiPoly one_minus_x = MultiPoly::one() - MultiPoly::variable(Var::x);
  expect("A(x,1-x) = 1 - p", A.substituted({{Var::y, one_minus_x}}),
         MultiPoly::one() - p);

  expect("M(x,1-x,x) = dp/dx",
         M.substituted({{Var::y, one_minus_x},
                        {Var::z, MultiPoly::variable(Var::x)}}),
         p.derivative(Var::x));

  const MultiPoly one_plus_y = MultiPoly::one() + MultiPoly::variable(Var::y);
  expect("P(1,y) = (1+y)^leaves", P.substituted({{Var::x, MultiPoly::one()}}),
         one_plus_y.pow(stats.n_leaves));

  auto expect_int = [&](std::string name, const BigInt& lhs,
                        const BigInt& rhs) {
    IdentityCheck check;
    check.name = std::move(name);
    check.pass = (lhs == rhs);
    if (!check.pass) {
      check.lhs = lhs.str();
      check.rhs = rhs.str();
    }
    report.checks.push_back(std::move(check));
  };

  expect_int("deg_x P = vertices", P.degree(Var::x), stats.n_vertices);
  expect_int("deg_y P = leaves", P.degree(Var::y), stats.n_leaves);
  expect_int("stem from P = stem walk", stem_from_P(P), stats.stem_length);

  return report;
}

}  // namespace treepoly
