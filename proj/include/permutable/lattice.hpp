#pragma once

#include <vector>

#include "permutable/group.hpp"

namespace permutable {

/// Every subgroup of `g`, in lattice order (order, then lexicographic on
/// member lists). Built from the cyclic subgroups by joining with cyclic
/// subgroups until nothing new appears.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits = {});

/// Every subgroup of `g` contained in `s`, in lattice order.
std::vector<Subgroup> subgroups_within(const Subgroup& s, const Limits& limits = {});

/// Normal subgroups of `g` taken from a precomputed lattice.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& lattice);

/// Minimal non-trivial normal subgroups of `g`.
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& lattice);

}  // namespace permutable
