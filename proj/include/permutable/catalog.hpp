#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permutable/group.hpp"

namespace permutable {

/// Dihedral group of order 2n acting on n points.
FiniteGroup dihedral(std::size_t n);
FiniteGroup quaternion8();
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating4();
FiniteGroup special_linear_2_3();
/// Non-abelian group of order p^3 and exponent p (p odd): C_p acting on
/// C_p x C_p by (a, b) -> (a + b, b).
FiniteGroup heisenberg(std::size_t p);
/// C_m acting on C_n through multiplication by r (r^m = 1 mod n).
FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r);
/// C_2 acting on an abelian group by inversion.
FiniteGroup generalized_dihedral(const FiniteGroup& abelian);
FiniteGroup power(const FiniteGroup& g, std::size_t k);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

/// Bundled groups of order at most 48: every group of order <= 24 that the
/// builders above reach, plus named examples of larger order.
const std::vector<CatalogEntry>& catalog();
std::optional<FiniteGroup> catalog_group(std::string_view name);

}  // namespace permutable
