#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permutable/group.hpp"

namespace permutable {

/// All K with |K| = |G|/|H| and H n K = 1, in lattice order. For finite groups
/// these two conditions already force HK = G.
std::vector<Subgroup> permutable_complements(const FiniteGroup& g, const Subgroup& h, const Limits& limits = {});
std::vector<Subgroup> permutable_complements(const std::vector<Subgroup>& lattice, const Subgroup& h);

/// First permutable complement of `h` in `g` contained in `within`, found by a
/// depth-first search over joins of cyclic subgroups. Works above the lattice
/// cap; the number of visited subgroups is bounded by `limits.max_subgroups`.
std::optional<Subgroup> find_complement_within(const Subgroup& h, const Subgroup& within,
                                               const Limits& limits = {});

struct CVerdict {
  bool c_group = true;
  std::optional<Subgroup> witness;  // first subgroup (lattice order) without a permutable complement
  std::size_t subgroups = 0;
};

CVerdict is_c_group(const FiniteGroup& g, const Limits& limits = {});

/// True iff every subgroup has a permutable complement, decided through the
/// structural decomposition instead of the full lattice (usable above the
/// lattice cap).
bool is_c_group_structural(const FiniteGroup& g, const Limits& limits = {});

/// A permutable complement of `h` contained in the supplement `s`.
/// Throws NotASupplement when HS != G and NoComplementFound when S holds none.
Subgroup refine_supplement(const FiniteGroup& g, const Subgroup& h, const Subgroup& s, const Limits& limits = {});

/// A permutable complement K of `h` with KN = S, given that S/N is a permutable
/// complement of HN/N in G/N and H n N = 1. Throws HypothesisViolated naming
/// the failed premise, or NoComplementFound.
Subgroup lift_complement(const FiniteGroup& g, const Subgroup& h, const Subgroup& n, const Subgroup& s,
                         const Limits& limits = {});

/// Same search without the H n N = 1 premise: a permutable complement K of
/// `h` with K <= s and KN = s, or nothing. `n` must be normal and contained in
/// `s`. K n N is searched among the subgroups of N of order |G:H||N|/|S|.
std::optional<Subgroup> lift_through_kernel(const Subgroup& h, const Subgroup& n, const Subgroup& s,
                                            const Limits& limits = {});

/// Intersection of the maximal G-invariant proper subgroups of the abelian
/// normal subgroup `a`. The trivial subgroup is its own radical.
Subgroup radical(const FiniteGroup& g, const Subgroup& a, const Limits& limits = {});

struct SplitResult {
  bool ok = false;
  std::vector<Subgroup> lines;  // G-invariant subgroups of prime order, direct product = A on success
  std::string failed_stage;     // "sylow_not_elementary" or "lines_do_not_span"
  std::string diagnosis;
  std::optional<Subgroup> radical;  // filled on failure when A is within the lattice cap
};

SplitResult split_abelian_normal(const FiniteGroup& g, const Subgroup& a, const Limits& limits = {});

struct PrimeGenerator {
  Element element;
  std::size_t order;
};

/// G = B x| A with A = G' the internal direct product of normal subgroups of
/// prime order and B the internal direct product of subgroups of prime order.
struct CernikovaDecomposition {
  std::vector<PrimeGenerator> a_generators;
  std::vector<PrimeGenerator> b_generators;
  Subgroup a_subgroup;
  Subgroup b_subgroup;
};

struct Stage {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct CernikovaResult {
  std::optional<CernikovaDecomposition> decomposition;
  std::vector<Stage> stages;
  std::string failed_stage;  // empty on success
};

/// Stages, in order: derived_abelian, split_derived, complement_of_derived,
/// decompose_complement. Succeeds exactly when G is a C-group.
CernikovaResult cernikova_decompose(const FiniteGroup& g, const Limits& limits = {});

/// Re-checks every structural invariant of a decomposition. Returns an empty
/// string when all hold, otherwise a description of the first violation.
std::string check_decomposition(const FiniteGroup& g, const CernikovaDecomposition& d);

struct RebuiltGroup {
  FiniteGroup group;               // B x| A built from cyclic factors
  std::vector<Element> to_parent;  // rebuilt element -> element of G
  bool is_isomorphism = false;     // bijective and multiplicative on all pairs
  std::string failure;
};

/// Builds the external semidirect product of the decomposition's cyclic
/// factors, with B acting on A by conjugation, and checks the generator map
/// into G elementwise.
RebuiltGroup rebuild_from_decomposition(const FiniteGroup& g, const CernikovaDecomposition& d);

struct SemidirectCertificate {
  bool holds = false;
  bool h_is_c_group = false;
  /// Per subgroup E of N (lattice order): a G-invariant permutable complement in N, if any.
  std::vector<std::pair<Subgroup, std::optional<Subgroup>>> complements;
  std::optional<bool> g_is_c_group;  // brute-force cross-check when G is within the lattice cap
};

/// Sufficient criterion for G = H x| N to be a C-group: H is a C-group and
/// every subgroup of N has a G-invariant permutable complement in N.
SemidirectCertificate semidirect_c_criterion(const FiniteGroup& g, const Subgroup& h, const Subgroup& n,
                                             const Limits& limits = {});

struct ThetaClass {
  std::vector<std::size_t> lines;   // indices into ThetaPartition::lines
  std::vector<std::size_t> scalars; // common character, one value per element of K
  Subgroup product;                 // direct product of the class's lines
};

/// Lines of an elementary abelian p-group grouped by the character through
/// which K acts on them: x^k = x^theta(k) for the line generator x.
struct ThetaPartition {
  std::size_t prime = 0;
  std::vector<Subgroup> lines;
  std::vector<Element> line_generators;
  std::vector<Element> k_elements;  // K in increasing index order
  std::vector<std::vector<std::size_t>> characters;
  std::vector<ThetaClass> classes;
  /// Product over classes of all lines but the first one in the class.
  /// Quotienting it out leaves one line per class.
  Subgroup collapsed;
};

ThetaPartition theta_partition(const FiniteGroup& g, const Subgroup& k, const Subgroup& p,
                               const std::vector<Subgroup>& lines);

/// For every H there is a K such that J n K complements H (not necessarily
/// permutably) in every J with H <= J <= G.
bool is_sc_group(const FiniteGroup& g, const Limits& limits = {});

}  // namespace permutable
