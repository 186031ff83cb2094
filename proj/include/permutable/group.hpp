#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "permutable/element_set.hpp"
#include "permutable/errors.hpp"
#include "permutable/limits.hpp"

namespace permutable {

/// A finite group given by its full multiplication table. The identity is
/// always element 0. Instances are immutable; copies share the table.
class FiniteGroup {
 public:
  static constexpr Element identity = 0;

  /// Validates `table` (row-major, n*n entries) and relabels the identity to 0
  /// when needed. Throws Error on any violated axiom.
  static FiniteGroup from_table(std::size_t n, std::vector<Element> table,
                                std::vector<std::string> labels = {},
                                const Limits& limits = {});

  std::size_t order() const noexcept { return impl_->n; }
  Element mul(Element x, Element y) const noexcept { return impl_->mul[std::size_t{x} * impl_->n + y]; }
  Element inv(Element x) const noexcept { return impl_->inv[x]; }
  Element power(Element x, long long k) const;
  Element commutator(Element x, Element y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  /// Right conjugation x^g = g^-1 x g.
  Element conjugate(Element x, Element g) const { return mul(mul(inv(g), x), g); }

  std::size_t element_order(Element x) const noexcept { return impl_->orders[x]; }
  /// Small generating set chosen greedily in index order.
  std::span<const Element> generators() const noexcept { return impl_->generators; }

  bool has_labels() const noexcept { return !impl_->labels.empty(); }
  std::string label(Element x) const;
  std::span<const std::string> labels() const noexcept { return impl_->labels; }

  std::span<const Element> table() const noexcept { return impl_->mul; }

  /// Identity of the shared table (two groups are "the same" object).
  bool same_as(const FiniteGroup& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl {
    std::size_t n = 0;
    std::vector<Element> mul;
    std::vector<Element> inv;
    std::vector<std::size_t> orders;
    std::vector<Element> generators;
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Subgroup of a parent group, stored as a membership bitset.
class Subgroup {
 public:
  /// Unchecked; callers guarantee closure. Use `subgroup_closure` or
  /// `make_subgroup` otherwise.
  Subgroup(FiniteGroup parent, ElementSet members) : parent_(std::move(parent)), members_(std::move(members)) {}

  const FiniteGroup& parent() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  std::vector<Element> elements() const { return members_.elements(); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_.order(); }

  bool is_subgroup_of(const Subgroup& other) const noexcept { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept { return a.members_ == b.members_; }

 private:
  FiniteGroup parent_;
  ElementSet members_;
};

/// Deterministic lattice order: by order, then lexicographic on member lists.
bool lattice_less(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Order of the set product |AB| = |A||B|/|A n B|.
std::size_t product_size(const Subgroup& a, const Subgroup& b);
/// Validates closure of an explicit element set.
Subgroup make_subgroup(const FiniteGroup& g, std::span<const Element> elements);

class Homomorphism {
 public:
  /// Validates the homomorphism property on all pairs.
  Homomorphism(FiniteGroup source, FiniteGroup target, std::vector<Element> map);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  Element operator()(Element x) const noexcept { return map_[x]; }
  std::span<const Element> map() const noexcept { return map_; }

  bool is_surjective() const;
  bool is_injective() const;
  Subgroup kernel() const;
  Subgroup image(const Subgroup& h) const;
  Subgroup preimage(const Subgroup& k) const;

  struct unchecked_t {};
  Homomorphism(unchecked_t, FiniteGroup source, FiniteGroup target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> map_;
};

/// Action of `actor` on `space` by automorphisms: row b of the table is the
/// automorphism a -> b.a, with act(b1 b2) = act(b1) o act(b2).
class GAction {
 public:
  GAction(FiniteGroup actor, FiniteGroup space, std::vector<Element> table);

  const FiniteGroup& actor() const noexcept { return actor_; }
  const FiniteGroup& space() const noexcept { return space_; }
  Element apply(Element b, Element a) const noexcept { return table_[std::size_t{b} * space_.order() + a]; }

  static GAction trivial(FiniteGroup actor, FiniteGroup space);

 private:
  FiniteGroup actor_;
  FiniteGroup space_;
  std::vector<Element> table_;
};

// Construction ---------------------------------------------------------------

FiniteGroup group_from_table(const std::vector<std::vector<long long>>& table, const Limits& limits = {});

using Permutation = std::vector<Element>;

/// Closure of the permutation group generated by `generators` on {0..degree-1}.
/// Products compose left to right: (x*y)(i) = y(x(i)). Elements are numbered in
/// breadth-first order from the identity, applying generators in input order.
FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    const Limits& limits = {});

FiniteGroup cyclic(std::size_t n);
/// Element (g,h) has index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Element (b,a) has index b*|A| + a, with (b1,a1)(b2,a2) = (b1 b2, act(b2^-1)(a1) a2).
FiniteGroup semidirect_product(const GAction& action);

// Structure ------------------------------------------------------------------

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Element> seeds);
Subgroup cyclic_subgroup(const FiniteGroup& g, Element x);
/// Closure of a subgroup together with extra elements.
Subgroup join(const Subgroup& h, std::span<const Element> extra);
Subgroup join(const Subgroup& a, const Subgroup& b);
/// Small generating set of a subgroup, chosen greedily in index order.
std::vector<Element> subgroup_generators(const Subgroup& h);

Subgroup center(const FiniteGroup& g);
Subgroup derived_subgroup(const FiniteGroup& g);
Subgroup derived_subgroup(const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// True when every element of `actors` normalizes `h`.
bool is_invariant_under(const Subgroup& h, std::span<const Element> actors);
bool is_abelian(const FiniteGroup& g);
bool is_abelian(const Subgroup& h);
std::size_t exponent(const FiniteGroup& g);
std::size_t exponent(const Subgroup& h);
std::size_t element_order(const FiniteGroup& g, Element x);
/// Distinct primes dividing the order.
std::vector<std::size_t> prime_divisors(std::size_t n);
bool is_prime(std::size_t n);
bool is_squarefree(std::size_t n);

struct Quotient {
  FiniteGroup group;
  Homomorphism projection;
};

/// Cosets are numbered by increasing minimal representative, so the identity
/// coset is 0.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

struct InducedGroup {
  FiniteGroup group;
  Homomorphism embedding;
};

/// The subgroup as a group in its own right; elements keep the parent's
/// relative order, so the identity stays first.
InducedGroup subgroup_as_group(const Subgroup& h);

}  // namespace permutable
