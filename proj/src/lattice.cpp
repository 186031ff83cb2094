#include "permutable/lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace permutable {

namespace {

struct Entry {
  Subgroup group;
  std::vector<Element> gens;
};

}  // namespace

std::vector<Subgroup> subgroups_within(const Subgroup& s, const Limits& limits) {
  const auto& g = s.parent();
  if (s.order() > limits.lattice_max_order)
    throw Error(ErrorKind::SubgroupLimitExceeded, "order " + std::to_string(s.order()) + " exceeds lattice cap " +
                                                      std::to_string(limits.lattice_max_order));

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Entry> entries;
  auto add = [&](Subgroup h, std::vector<Element> gens) {
    if (!seen.insert(h.members()).second) return;
    if (seen.size() > limits.max_subgroups)
      throw Error(ErrorKind::SubgroupLimitExceeded,
                  "more than " + std::to_string(limits.max_subgroups) + " subgroups (reached " +
                      std::to_string(seen.size()) + ")");
    entries.push_back({std::move(h), std::move(gens)});
  };

  add(trivial_subgroup(g), {});
  std::vector<Element> cyclic_reps;
  for (auto x : s.elements()) {
    if (x == FiniteGroup::identity) continue;
    auto c = cyclic_subgroup(g, x);
    if (seen.contains(c.members())) continue;
    cyclic_reps.push_back(x);
    add(std::move(c), {x});
  }

  for (std::size_t i = 1; i < entries.size(); ++i) {
    for (auto x : cyclic_reps) {
      if (entries[i].group.contains(x)) continue;
      auto gens = entries[i].gens;
      gens.push_back(x);
      auto joined = subgroup_closure(g, gens);
      if (seen.contains(joined.members())) continue;
      add(std::move(joined), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.group));
  std::sort(out.begin(), out.end(), lattice_less);
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  return subgroups_within(whole_group(g), limits);
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& lattice) {
  std::vector<Subgroup> out;
  for (const auto& h : lattice)
    if (is_normal(g, h)) out.push_back(h);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& lattice) {
  const auto normals = normal_subgroups(g, lattice);
  std::vector<Subgroup> out;
  for (const auto& n : normals) {
    if (n.is_trivial()) continue;
    const bool minimal = std::none_of(normals.begin(), normals.end(), [&](const Subgroup& m) {
      return !m.is_trivial() && m.order() < n.order() && m.is_subgroup_of(n);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

}  // namespace permutable
