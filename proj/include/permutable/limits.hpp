#pragma once

#include <cstddef>

namespace permutable {

/// Size caps shared by all operations. Every brute-force routine checks the
/// relevant cap before it starts and raises a cap error instead of running away.
struct Limits {
  std::size_t max_order = 512;          // group construction (tables, permutation closure)
  std::size_t lattice_max_order = 200;  // full subgroup lattice enumeration
  std::size_t max_subgroups = 20000;    // lattice size
  std::size_t sc_max_order = 24;        // SC-group test
  std::size_t system_max_total = 2000;  // sum of level orders in an inverse system

  /// Defaults, with PERMUTABLE_MAX_ORDER applied when set (see `apply_max_order`).
  static Limits from_env();

  /// Sets the lattice cap and raises the construction cap to at least `order`.
  void apply_max_order(std::size_t order);
};

}  // namespace permutable
