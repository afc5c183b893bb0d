#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treepoly/invariants.hpp"
#include "treepoly/multipoly.hpp"
#include "treepoly/rooted_tree.hpp"

namespace treepoly {

enum class InvariantKind { P, p, S, A, M, pgf };

std::optional<InvariantKind> invariant_from_name(std::string_view name);
std::string_view invariant_name(InvariantKind kind);

/// Largest n accepted without SearchOptions::allow_deep. Chosen so every
/// exhaustive sweep stays in the minutes range on one workstation core.
int desk_scale_bound(InvariantKind kind, bool forests);

struct CollisionClass {
  std::string invariant_value;       // canonical polynomial string
  std::vector<std::string> members;  // canonical encodings, sorted; size >= 2
};

struct CollisionReport {
  InvariantKind invariant = InvariantKind::P;
  int n = 0;
  bool forests = false;
  std::uint64_t population = 0;      // objects swept
  std::vector<CollisionClass> classes;  // sorted by invariant_value

  bool empty() const noexcept { return classes.empty(); }
};

struct SearchOptions {
  int jobs = 1;
  bool forests = false;     // sweep forests instead of trees (P and S only)
  bool allow_deep = false;  // lift the desk-scale bound on n
};

/// Groups all n-vertex trees (or forests) by the exact serialized
/// invariant and reports the groups of size >= 2. The grouping key is the
/// canonical polynomial string, no fingerprinting, so a reported class is
/// already confirmed. Output is byte-identical for every jobs value.
CollisionReport collision_search(InvariantKind kind, int n,
                                 const SearchOptions& opts = {});

struct CompletenessRow {
  int n = 0;
  std::uint64_t population = 0;
  std::uint64_t collision_classes = 0;
  std::uint64_t colliding_members = 0;
};

/// collision_search summarized for every size 1..n_max (0..n_max for
/// forests).
std::vector<CompletenessRow> completeness_report(InvariantKind kind, int n_max,
                                                 const SearchOptions& opts = {});

/// All trees whose invariant equals the target, searched over the vertex
/// count implied by the target: deg_x for P and S, the degree of p for p,
/// the p recovered through A(x,1-x) = 1-p for A, and the z-degree of the
/// x-constant part plus one for M. Throws DomainError when no positive
/// size can be read off the target.
std::vector<RootedTree> reconstruct_from_polynomial(InvariantKind kind,
                                                    const MultiPoly& target);

struct StrengthReport {
  int n_max = 0;
  /// Within every class of equal M, the members' A agreed; within every
  /// class of equal A, the members' p agreed.
  bool hierarchy_ok = true;
  std::uint64_t a_collision_classes = 0;
  std::uint64_t m_collision_classes = 0;
  /// Some class of p-equal trees contains members with different A.
  bool p_class_split_by_A = false;
  /// Some class of A-equal trees contains members with different M.
  bool a_class_split_by_M = false;
  std::vector<std::string> findings;  // deterministic, human-readable lines
};

/// Sweeps n = 1..n_max verifying that the invariants form a hierarchy
/// (M determines A determines p on every collision class found) and
/// records where the inclusions are strict.
StrengthReport cross_invariant_strength(int n_max, const SearchOptions& opts = {});

}  // namespace treepoly
