#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permutable/group.hpp"

namespace permutable {

/// Finite-depth truncation G_0 <- G_1 <- ... <- G_d of an inverse system.
/// `bond_maps[k]` sends G_{k+1} to G_k. Shapes are checked on construction;
/// the algebraic conditions are reported by `validate_system`.
class InverseSystem {
 public:
  InverseSystem(std::vector<FiniteGroup> levels, std::vector<std::vector<Element>> bond_maps,
                const Limits& limits = {});

  std::size_t depth() const noexcept { return levels_.size() - 1; }
  const std::vector<FiniteGroup>& levels() const noexcept { return levels_; }
  const FiniteGroup& level(std::size_t k) const { return levels_.at(k); }
  const std::vector<Element>& bond_map(std::size_t k) const { return bond_maps_.at(k); }
  /// Checked homomorphism G_{k+1} -> G_k; throws when the bond is not one.
  Homomorphism bond(std::size_t k) const;

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<Element>> bond_maps_;
};

struct BondCheck {
  std::size_t bond = 0;  // maps level bond+1 to level bond
  bool homomorphism = false;
  bool surjective = false;
  std::string detail;
};

struct SystemReport {
  bool valid = true;
  std::vector<BondCheck> bonds;
};

SystemReport validate_system(const InverseSystem& sys);

/// Closed subgroup seen through its finite images: phi_k(H_{k+1}) = H_k.
struct CompatibleSubgroup {
  std::vector<Subgroup> levels;
};

/// Family generated by `top_generators` at the deepest level, pushed down by the bonds.
CompatibleSubgroup compatible_from_top(const InverseSystem& sys, std::span<const Element> top_generators);
/// Throws InvalidSystem unless every bond maps H_{k+1} exactly onto H_k.
void validate_compatible(const InverseSystem& sys, const CompatibleSubgroup& h);

struct ComplementChain {
  std::vector<Subgroup> levels;
};

/// Empty when K_k is a permutable complement of H_k at every level and
/// phi_k(K_{k+1}) <= K_k; otherwise the first violation.
std::string check_chain(const InverseSystem& sys, const CompatibleSubgroup& h, const ComplementChain& chain);

enum class LevelCheck {
  /// Full lattice within the lattice cap, structural decomposition above it.
  Auto,
  /// Full lattice only; levels above the cap raise SubgroupLimitExceeded.
  BruteForce,
};

struct LevelVerdict {
  std::size_t level = 0;
  std::size_t order = 0;
  bool c_group = false;
  std::string method;  // "lattice" or "structural"
  std::optional<Subgroup> witness;
};

struct ProfiniteVerdict {
  bool c_groups = true;
  std::optional<std::size_t> failing_level;
  std::vector<LevelVerdict> levels;
};

ProfiniteVerdict is_profinite_c_truncated(const InverseSystem& sys, const Limits& limits = {},
                                          LevelCheck check = LevelCheck::Auto);

/// Descending chain of permutable complements: K_0 is any complement of H_0,
/// and K_{k+1} is searched inside the preimage of K_k.
/// Throws NoChainFound when some level admits no such complement.
ComplementChain lift_complement_chain(const InverseSystem& sys, const CompatibleSubgroup& h,
                                      const Limits& limits = {});

struct LevelStats {
  std::size_t level = 0;
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t index = 0;  // |G_k : Z(G_k) G_k'|
};

struct TheoremCReport {
  std::vector<LevelStats> levels;
  std::string index_trend;     // "bounded", "strictly_growing" or "inconclusive"
  std::string exponent_trend;  // "stable", "growing" or "inconclusive"
  bool constant_system = false;      // every bond is bijective
  std::optional<bool> limit_is_c_group;  // filled for constant systems
  std::string note;
};

TheoremCReport theorem_c_report(const InverseSystem& sys, const Limits& limits = {});

struct FamilyParams {
  std::size_t p = 0;
  std::size_t q = 0;
};

/// Built-in families, levels 0..depth with G_0 trivial and bonds dropping the
/// last coordinate:
///   "pq-power"     (C_p x| C_q)^k for primes with p = 1 mod q
///   "prime-column" C_2 x C_3 x ... x C_{p_k}
///   "elementary"   (C_p)^k
InverseSystem example_system(const std::string& kind, const FamilyParams& params, std::size_t depth,
                             const Limits& limits = {});

/// The non-abelian group of order pq with the chosen generator of C_q acting
/// on C_p by its smallest multiplier of order q.
FiniteGroup metacyclic_pq(std::size_t p, std::size_t q);

/// Non-trivial cyclic subgroups of `a` that are normal in `g`, in lattice order.
std::vector<Subgroup> normal_cyclics_in_A(const FiniteGroup& g, const Subgroup& a);

}  // namespace permutable
