#pragma once

#include <string>
#include <vector>

#include "permutable/group.hpp"

namespace permutable {

enum class Outcome { Pass, Fail, Skip };

std::string_view to_string(Outcome o);

struct PropertyResult {
  std::string name;
  Outcome outcome = Outcome::Skip;
  std::string detail;
};

/// Precomputed facts about one group, shared by the property checks.
struct GroupFacts {
  FiniteGroup group;
  std::vector<Subgroup> lattice;
  bool c_group = false;
};

GroupFacts gather_facts(const FiniteGroup& g, const Limits& limits = {});

// Each check returns Skip when its premise does not apply to the group.

/// cernikova_decompose succeeds exactly when the lattice verdict is positive.
PropertyResult check_oracle_equivalence(const GroupFacts& f, const Limits& limits = {});
/// Subgroups of a C-group are C-groups.
PropertyResult check_subgroup_heredity(const GroupFacts& f, const Limits& limits = {});
/// Quotients of a C-group are C-groups.
PropertyResult check_quotient_heredity(const GroupFacts& f, const Limits& limits = {});
/// In a C-group every supplement of H contains a permutable complement of H
/// (all pairs H, S).
PropertyResult check_supplements(const GroupFacts& f, const Limits& limits = {});
/// A C-group has abelian derived subgroup.
PropertyResult check_metabelian(const GroupFacts& f);
/// Minimal normal subgroups of a C-group have prime order.
PropertyResult check_minimal_normals(const GroupFacts& f);
/// C-groups have squarefree exponent; for abelian groups the converse holds.
PropertyResult check_squarefree_exponent(const GroupFacts& f);
/// In a C-group every non-trivial abelian normal subgroup has trivial radical
/// and splits into lines whose orders multiply to its order. (Outside
/// C-groups a trivial radical does not force prime-order lines: V4 in A4.)
PropertyResult check_radical_split(const GroupFacts& f, const Limits& limits = {});
/// Rebuilding a C-group from its decomposition gives an isomorphism.
PropertyResult check_round_trip(const GroupFacts& f, const Limits& limits = {});
/// Conjugating H by g maps its permutable complements onto those of H^g.
PropertyResult check_complement_conjugation(const GroupFacts& f);
/// is_sc_group agrees with the C verdict (only within the SC cap).
PropertyResult check_sc_equivalence(const GroupFacts& f, const Limits& limits = {});
/// is_c_group(G1 x G2) equals is_c_group(G1) and is_c_group(G2).
PropertyResult check_product_closure(const GroupFacts& a, const GroupFacts& b, const Limits& limits = {});

/// Names of the per-group checks in the order `run_group_checks` reports them.
const std::vector<std::string>& group_check_names();
std::vector<PropertyResult> run_group_checks(const GroupFacts& f, const Limits& limits = {});

/// Image of a subgroup under conjugation by g.
Subgroup conjugate_subgroup(const Subgroup& h, Element g);

}  // namespace permutable
