#include "treepoly/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>
#include <unordered_map>
#include <utility>

#include "treepoly/enumeration.hpp"
#include "treepoly/errors.hpp"

namespace treepoly {

std::optional<InvariantKind> invariant_from_name(std::string_view name) {
  if (name == "P") return InvariantKind::P;
  if (name == "p") return InvariantKind::p;
  if (name == "S") return InvariantKind::S;
  if (name == "A") return InvariantKind::A;
  if (name == "M") return InvariantKind::M;
  if (name == "pgf") return InvariantKind::pgf;
  return std::nullopt;
}

std::string_view invariant_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::P: return "P";
    case InvariantKind::p: return "p";
    case InvariantKind::S: return "S";
    case InvariantKind::A: return "A";
    case InvariantKind::M: return "M";
    case InvariantKind::pgf: return "pgf";
  }
  return "?";
}

int desk_scale_bound(InvariantKind kind, bool forests) {
  switch (kind) {
    case InvariantKind::P:
    case InvariantKind::S:
      // Forest sweeps ride the (n+1)-tree bijection, so one size less.
      return forests ? 13 : 14;
    case InvariantKind::p:
    case InvariantKind::A:
      return 14;
    case InvariantKind::M:
      return 13;
    case InvariantKind::pgf:
      return 11;
  }
  return 0;
}

namespace {

std::string invariant_value_string(InvariantKind kind, Invariants& inv,
                                   const RootedTree& t) {
  switch (kind) {
    case InvariantKind::P: return inv.P(t).str();
    case InvariantKind::p: return inv.p(t).str();
    case InvariantKind::S: return inv.S(t).str();
    case InvariantKind::A: return inv.A(t).str();
    case InvariantKind::M: return inv.M(t).str();
    case InvariantKind::pgf: return inv.pgf(t).str();
  }
  throw DomainError("unknown invariant");
}

std::string invariant_value_string(InvariantKind kind, Invariants& inv,
                                   const RootedForest& f) {
  switch (kind) {
    case InvariantKind::P: return inv.P(f).str();
    case InvariantKind::S: return inv.S(f).str();
    default:
      throw DomainError("forest sweeps are defined for P and S only");
  }
}

using GroupMap = std::unordered_map<std::string, std::vector<std::string>>;

// Runs fn(worker_index) on opts.jobs threads (or inline when jobs == 1).
void run_workers(int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int j = 0; j < jobs; ++j) pool.emplace_back(fn, j);
  for (std::thread& th : pool) th.join();
}

// Enumerates the population (trees of size n, or forests of total size n),
// computes the invariant string of each member on a round-robin shard
// assignment, and groups members by value.
GroupMap group_by_invariant(InvariantKind kind, int n,
                            const SearchOptions& opts,
                            std::uint64_t* population_out) {
  const int jobs = std::max(1, opts.jobs);
  std::vector<GroupMap> partial(jobs);
  std::vector<std::uint64_t> counted(jobs, 0);

  run_workers(jobs, [&](int j) {
    Invariants inv;
    std::uint64_t index = 0;
    if (opts.forests) {
      ForestStream stream(n);
      while (std::optional<RootedForest> f = stream.next()) {
        if (static_cast<int>(index % jobs) == j) {
          partial[j][invariant_value_string(kind, inv, *f)].push_back(
              f->encoding());
          ++counted[j];
        }
        ++index;
      }
    } else {
      TreeStream stream(n);
      while (std::optional<RootedTree> t = stream.next()) {
        if (static_cast<int>(index % jobs) == j) {
          partial[j][invariant_value_string(kind, inv, *t)].push_back(
              t->encoding());
          ++counted[j];
        }
        ++index;
      }
    }
  });

  GroupMap merged = std::move(partial[0]);
  std::uint64_t population = counted[0];
  for (int j = 1; j < jobs; ++j) {
    for (auto& [value, members] : partial[j]) {
      auto& dst = merged[value];
      dst.insert(dst.end(), std::make_move_iterator(members.begin()),
                 std::make_move_iterator(members.end()));
    }
    population += counted[j];
  }
  if (population_out != nullptr) *population_out = population;
  return merged;
}

}  // namespace

CollisionReport collision_search(InvariantKind kind, int n,
                                 const SearchOptions& opts) {
  if (opts.forests && kind != InvariantKind::P && kind != InvariantKind::S) {
    throw DomainError("forest collision sweeps are defined for P and S only");
  }
  const int min_n = opts.forests ? 0 : 1;
  if (n < min_n) throw DomainError("collision_search: n out of range");
  const int bound = desk_scale_bound(kind, opts.forests);
  if (n > bound && !opts.allow_deep) {
    throw DomainError("collision_search: n = " + std::to_string(n) +
                      " exceeds the desk-scale bound " + std::to_string(bound) +
                      " for " + std::string(invariant_name(kind)) +
                      " (pass allow_deep / --deep to override)");
  }

  CollisionReport report;
  report.invariant = kind;
  report.n = n;
  report.forests = opts.forests;
  GroupMap groups = group_by_invariant(kind, n, opts, &report.population);
  for (auto& [value, members] : groups) {
    if (members.size() < 2) continue;
    CollisionClass cls;
    cls.invariant_value = value;
    cls.members = std::move(members);
    std::sort(cls.members.begin(), cls.members.end());
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const CollisionClass& a, const CollisionClass& b) {
              return a.invariant_value < b.invariant_value;
            });
  return report;
}

std::vector<CompletenessRow> completeness_report(InvariantKind kind, int n_max,
                                                 const SearchOptions& opts) {
  std::vector<CompletenessRow> rows;
  for (int n = opts.forests ? 0 : 1; n <= n_max; ++n) {
    CollisionReport report = collision_search(kind, n, opts);
    CompletenessRow row;
    row.n = n;
    row.population = report.population;
    row.collision_classes = report.classes.size();
    for (const CollisionClass& cls : report.classes) {
      row.colliding_members += cls.members.size();
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

int implied_vertex_count(InvariantKind kind, const MultiPoly& target) {
  switch (kind) {
    case InvariantKind::P:
    case InvariantKind::S:
      return target.degree(Var::x);
    case InvariantKind::p:
      return target.degree(Var::x);
    case InvariantKind::A: {
      const MultiPoly p = MultiPoly::one() - target.substituted(
          {{Var::y, MultiPoly::one() - MultiPoly::variable(Var::x)}});
      return p.degree(Var::x);
    }
    case InvariantKind::M: {
      // The x-constant part of M is p(z)/z, of z-degree n-1.
      const MultiPoly base = target.coefficient_of(Var::x, 0);
      if (base.is_zero()) return 0;
      return base.degree(Var::z) + 1;
    }
    case InvariantKind::pgf:
      break;
  }
  throw DomainError("reconstruction is defined for P, p, S, A, M");
}

}  // namespace

std::vector<RootedTree> reconstruct_from_polynomial(InvariantKind kind,
                                                    const MultiPoly& target) {
  const int n = implied_vertex_count(kind, target);
  if (n <= 0) {
    throw DomainError(
        "reconstruct_from_polynomial: target implies a non-positive vertex "
        "count");
  }
  Invariants inv;
  std::vector<RootedTree> matches;
  TreeStream stream(n);
  while (std::optional<RootedTree> t = stream.next()) {
    const MultiPoly* value = nullptr;
    switch (kind) {
      case InvariantKind::P: value = &inv.P(*t); break;
      case InvariantKind::p: value = &inv.p(*t); break;
      case InvariantKind::S: value = &inv.S(*t); break;
      case InvariantKind::A: value = &inv.A(*t); break;
      case InvariantKind::M: value = &inv.M(*t); break;
      case InvariantKind::pgf: break;
    }
    if (value != nullptr && *value == target) matches.push_back(std::move(*t));
  }
  return matches;
}

StrengthReport cross_invariant_strength(int n_max, const SearchOptions& opts) {
  const int bound = desk_scale_bound(InvariantKind::M, false);
  if (n_max > bound && !opts.allow_deep) {
    throw DomainError("cross_invariant_strength: n_max = " +
                      std::to_string(n_max) + " exceeds the desk-scale bound " +
                      std::to_string(bound) +
                      " (pass allow_deep to override)");
  }
  StrengthReport report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    // One pass computing all three invariant strings per tree.
    struct Entry {
      std::string p, a, m;
    };
    std::map<std::string, std::vector<const Entry*>> by_p, by_a, by_m;
    std::vector<Entry> entries;
    {
      Invariants inv;
      TreeStream stream(n);
      entries.reserve(64);
      while (std::optional<RootedTree> t = stream.next()) {
        Entry e;
        e.p = inv.p(*t).str();
        e.a = inv.A(*t).str();
        e.m = inv.M(*t).str();
        entries.push_back(std::move(e));
      }
    }
    for (const Entry& e : entries) {
      by_p[e.p].push_back(&e);
      by_a[e.a].push_back(&e);
      by_m[e.m].push_back(&e);
    }

    for (const auto& [value, group] : by_a) {
      if (group.size() < 2) continue;
      ++report.a_collision_classes;
      bool p_consistent = true;
      bool m_uniform = true;
      for (const Entry* e : group) {
        p_consistent = p_consistent && (e->p == group.front()->p);
        m_uniform = m_uniform && (e->m == group.front()->m);
      }
      if (!p_consistent) {
        report.hierarchy_ok = false;
        report.findings.push_back("n=" + std::to_string(n) +
                                  ": A-equal trees with different p");
      }
      if (!m_uniform) {
        report.a_class_split_by_M = true;
        report.findings.push_back("n=" + std::to_string(n) +
                                  ": A-equal trees separated by M");
      }
    }
    for (const auto& [value, group] : by_m) {
      if (group.size() < 2) continue;
      ++report.m_collision_classes;
      for (const Entry* e : group) {
        if (e->a != group.front()->a) {
          report.hierarchy_ok = false;
          report.findings.push_back("n=" + std::to_string(n) +
                                    ": M-equal trees with different A");
          break;
        }
      }
    }
    for (const auto& [value, group] : by_p) {
      if (group.size() < 2) continue;
      for (const Entry* e : group) {
        if (e->a != group.front()->a) {
          report.p_class_split_by_A = true;
          report.findings.push_back("n=" + std::to_string(n) +
                                    ": p-equal trees separated by A");
          break;
        }
      }
    }
  }
  std::sort(report.findings.begin(), report.findings.end());
  report.findings.erase(
      std::unique(report.findings.begin(), report.findings.end()),
      report.findings.end());
  return report;
}

}  // namespace treepoly
