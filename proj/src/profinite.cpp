#include "permutable/profinite.hpp"

#include <algorithm>
#include <unordered_set>

#include "permutable/complement.hpp"
#include "permutable/lattice.hpp"

namespace permutable {

InverseSystem::InverseSystem(std::vector<FiniteGroup> levels, std::vector<std::vector<Element>> bond_maps,
                             const Limits& limits)
    : levels_(std::move(levels)), bond_maps_(std::move(bond_maps)) {
  if (levels_.empty()) throw Error(ErrorKind::InvalidSystem, "system has no levels");
  if (bond_maps_.size() + 1 != levels_.size())
    throw Error(ErrorKind::InvalidSystem, "expected " + std::to_string(levels_.size() - 1) + " bonds, got " +
                                              std::to_string(bond_maps_.size()));
  std::size_t total = 0;
  for (const auto& g : levels_) total += g.order();
  if (total > limits.system_max_total)
    throw Error(ErrorKind::OrderCapExceeded, "total level order " + std::to_string(total) + " exceeds cap " +
                                                 std::to_string(limits.system_max_total));
  for (std::size_t k = 0; k < bond_maps_.size(); ++k) {
    if (bond_maps_[k].size() != levels_[k + 1].order())
      throw Error(ErrorKind::InvalidSystem, "bond " + std::to_string(k) + " has wrong length");
    for (auto y : bond_maps_[k])
      if (y >= levels_[k].order())
        throw Error(ErrorKind::InvalidSystem, "bond " + std::to_string(k) + " maps outside level " + std::to_string(k));
  }
}

Homomorphism InverseSystem::bond(std::size_t k) const {
  return Homomorphism(levels_.at(k + 1), levels_.at(k), bond_maps_.at(k));
}

SystemReport validate_system(const InverseSystem& sys) {
  SystemReport report;
  for (std::size_t k = 0; k < sys.depth(); ++k) {
    BondCheck check{k, false, false, {}};
    try {
      const auto phi = sys.bond(k);
      check.homomorphism = true;
      check.surjective = phi.is_surjective();
      if (!check.surjective) check.detail = "bond is not surjective";
    } catch (const Error& e) {
      check.detail = e.what();
    }
    report.valid = report.valid && check.homomorphism && check.surjective;
    report.bonds.push_back(std::move(check));
  }
  return report;
}

CompatibleSubgroup compatible_from_top(const InverseSystem& sys, std::span<const Element> top_generators) {
  CompatibleSubgroup h;
  std::vector<Subgroup> rev{subgroup_closure(sys.level(sys.depth()), top_generators)};
  for (std::size_t k = sys.depth(); k-- > 0;) rev.push_back(sys.bond(k).image(rev.back()));
  h.levels.assign(rev.rbegin(), rev.rend());
  return h;
}

void validate_compatible(const InverseSystem& sys, const CompatibleSubgroup& h) {
  if (h.levels.size() != sys.levels().size())
    throw Error(ErrorKind::InvalidSystem, "compatible family has the wrong number of levels");
  for (std::size_t k = 0; k < h.levels.size(); ++k) {
    if (h.levels[k].parent().order() != sys.level(k).order())
      throw Error(ErrorKind::InvalidSystem, "subgroup at level " + std::to_string(k) + " lives in another group");
  }
  for (std::size_t k = 0; k < sys.depth(); ++k) {
    if (!(sys.bond(k).image(h.levels[k + 1]) == h.levels[k]))
      throw Error(ErrorKind::InvalidSystem,
                  "bond " + std::to_string(k) + " does not map H_" + std::to_string(k + 1) + " onto H_" + std::to_string(k));
  }
}

std::string check_chain(const InverseSystem& sys, const CompatibleSubgroup& h, const ComplementChain& chain) {
  if (chain.levels.size() != sys.levels().size()) return "chain has the wrong number of levels";
  for (std::size_t k = 0; k < chain.levels.size(); ++k) {
    const auto& hk = h.levels[k];
    const auto& kk = chain.levels[k];
    if (hk.members().intersection_size(kk.members()) != 1) return "H n K is not trivial at level " + std::to_string(k);
    if (product_size(hk, kk) != sys.level(k).order()) return "HK is not the whole group at level " + std::to_string(k);
  }
  for (std::size_t k = 0; k < sys.depth(); ++k)
    if (!sys.bond(k).image(chain.levels[k + 1]).is_subgroup_of(chain.levels[k]))
      return "bond " + std::to_string(k) + " does not map K_" + std::to_string(k + 1) + " into K_" + std::to_string(k);
  return {};
}

ProfiniteVerdict is_profinite_c_truncated(const InverseSystem& sys, const Limits& limits, LevelCheck check) {
  ProfiniteVerdict out;
  for (std::size_t k = 0; k < sys.levels().size(); ++k) {
    const auto& g = sys.level(k);
    LevelVerdict v{k, g.order(), false, {}, std::nullopt};
    try {
      if (check == LevelCheck::BruteForce || g.order() <= limits.lattice_max_order) {
        auto c = is_c_group(g, limits);
        v.method = "lattice";
        v.c_group = c.c_group;
        v.witness = std::move(c.witness);
      } else {
        v.method = "structural";
        v.c_group = is_c_group_structural(g, limits);
      }
    } catch (Error& e) {
      throw e.at_level(k);
    }
    if (!v.c_group && !out.failing_level) out.failing_level = k;
    out.c_groups = out.c_groups && v.c_group;
    out.levels.push_back(std::move(v));
  }
  return out;
}

ComplementChain lift_complement_chain(const InverseSystem& sys, const CompatibleSubgroup& h, const Limits& limits) {
  validate_compatible(sys, h);
  ComplementChain chain;

  const auto& g0 = sys.level(0);
  std::optional<Subgroup> k0;
  if (g0.order() <= limits.lattice_max_order) {
    auto all = permutable_complements(g0, h.levels[0], limits);
    if (!all.empty()) k0 = std::move(all.front());
  } else {
    k0 = find_complement_within(h.levels[0], whole_group(g0), limits);
  }
  if (!k0) throw Error(ErrorKind::NoChainFound, "no permutable complement at level 0").at_level(0);
  chain.levels.push_back(std::move(*k0));

  for (std::size_t k = 0; k < sys.depth(); ++k) {
    const auto phi = sys.bond(k);
    const auto s = phi.preimage(chain.levels[k]);
    const auto kernel = phi.kernel();
    auto next = lift_through_kernel(h.levels[k + 1], kernel, s, limits);
    if (!next) next = find_complement_within(h.levels[k + 1], s, limits);
    if (!next)
      throw Error(ErrorKind::NoChainFound,
                  "no permutable complement inside the preimage of K_" + std::to_string(k))
          .at_level(k + 1);
    chain.levels.push_back(std::move(*next));
  }

  if (auto err = check_chain(sys, h, chain); !err.empty()) throw Error(ErrorKind::NoChainFound, err);
  return chain;
}

namespace {

std::string trend(const std::vector<std::size_t>& values, const char* growing, const char* steady) {
  if (values.size() <= 1) return steady;
  bool increasing = true;
  for (std::size_t i = 1; i < values.size(); ++i) increasing = increasing && values[i] > values[i - 1];
  if (increasing) return growing;
  if (values[values.size() - 1] == values[values.size() - 2]) return steady;
  return "inconclusive";
}

}  // namespace

TheoremCReport theorem_c_report(const InverseSystem& sys, const Limits& limits) {
  TheoremCReport out;
  std::vector<std::size_t> indices, exponents;
  for (std::size_t k = 0; k < sys.levels().size(); ++k) {
    const auto& g = sys.level(k);
    const auto z = center(g);
    const auto d = derived_subgroup(g);
    LevelStats s;
    s.level = k;
    s.order = g.order();
    s.exponent = exponent(g);
    s.center_order = z.order();
    s.derived_order = d.order();
    s.index = g.order() / product_size(z, d);
    indices.push_back(s.index);
    exponents.push_back(s.exponent);
    out.levels.push_back(s);
  }
  out.index_trend = trend(indices, "strictly_growing", "bounded");
  out.exponent_trend = trend(exponents, "growing", "stable");

  out.constant_system = true;
  for (std::size_t k = 0; k < sys.depth(); ++k)
    out.constant_system = out.constant_system && sys.level(k).order() == sys.level(k + 1).order() &&
                          sys.bond(k).is_surjective();
  if (out.constant_system) {
    const auto& top = sys.level(sys.depth());
    out.limit_is_c_group =
        top.order() <= limits.lattice_max_order ? is_c_group(top, limits).c_group : is_c_group_structural(top, limits);
  }
  out.note = "heuristic at truncation depth " + std::to_string(sys.depth()) +
             ": the centre of the limit can be smaller than the levelwise centres";
  return out;
}

FiniteGroup metacyclic_pq(std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q)) throw Error(ErrorKind::BadParams, "p and q must be prime");
  if (p % q != 1) throw Error(ErrorKind::BadParams, std::to_string(p) + " is not 1 mod " + std::to_string(q));
  std::size_t r = 0;
  for (std::size_t c = 2; c < p && !r; ++c) {
    std::size_t x = 1;
    for (std::size_t i = 0; i < q; ++i) x = x * c % p;
    if (x == 1) r = c;
  }
  auto actor = cyclic(q);
  auto space = cyclic(p);
  std::vector<Element> table(q * p);
  std::size_t scale = 1;
  for (std::size_t b = 0; b < q; ++b) {
    for (std::size_t a = 0; a < p; ++a) table[b * p + a] = static_cast<Element>(a * scale % p);
    scale = scale * r % p;
  }
  return semidirect_product(GAction(std::move(actor), std::move(space), std::move(table)));
}

InverseSystem example_system(const std::string& kind, const FamilyParams& params, std::size_t depth,
                             const Limits& limits) {
  std::vector<FiniteGroup> factors;
  if (kind == "pq-power") {
    const auto base = metacyclic_pq(params.p, params.q);
    factors.assign(depth, base);
  } else if (kind == "prime-column") {
    for (std::size_t c = 2; factors.size() < depth; ++c)
      if (is_prime(c)) factors.push_back(cyclic(c));
  } else if (kind == "elementary") {
    if (!is_prime(params.p)) throw Error(ErrorKind::BadParams, "p must be prime");
    factors.assign(depth, cyclic(params.p));
  } else {
    throw Error(ErrorKind::BadParams, "unknown family '" + kind + "'");
  }

  std::size_t total = 1, order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    total += order;
    if (total > limits.system_max_total)
      throw Error(ErrorKind::BadParams, "family exceeds the system cap of " + std::to_string(limits.system_max_total));
  }

  std::vector<FiniteGroup> levels{cyclic(1)};
  std::vector<std::vector<Element>> bonds;
  for (const auto& f : factors) {
    levels.push_back(direct_product(levels.back(), f));
    std::vector<Element> drop(levels.back().order());
    for (std::size_t x = 0; x < drop.size(); ++x) drop[x] = static_cast<Element>(x / f.order());
    bonds.push_back(std::move(drop));
  }
  return InverseSystem(std::move(levels), std::move(bonds), limits);
}

std::vector<Subgroup> normal_cyclics_in_A(const FiniteGroup& g, const Subgroup& a) {
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (auto x : a.elements()) {
    if (x == FiniteGroup::identity) continue;
    auto c = cyclic_subgroup(g, x);
    if (!seen.insert(c.members()).second) continue;
    if (is_normal(g, c)) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), lattice_less);
  return out;
}

}  // namespace permutable
