#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permutable/catalog.hpp"
#include "permutable/complement.hpp"
#include "permutable/lattice.hpp"
#include "permutable/properties.hpp"

using namespace permutable;

namespace {

constexpr std::uint64_t kSeed = 0x70e1a5;

std::vector<const CatalogEntry*> entries_up_to(std::size_t order) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.group.order() <= order) out.push_back(&e);
  return out;
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("catalog: size and coverage") {
  const auto& all = catalog();
  CHECK(all.size() >= 30);
  for (const auto& e : all) CHECK(e.group.order() <= 48);
  for (std::size_t n : {6, 10, 15, 21, 30, 42}) {
    const bool present = std::any_of(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.group.order() == n; });
    CHECK(present);
  }
  for (const auto* name : {"C4", "Q8", "D4", "Heis27", "S3", "C2^3"}) CHECK(catalog_group(name));
  CHECK_FALSE(catalog_group("M11"));
}

TEST_CASE("catalog: the invariant suite passes on every group") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const auto facts = gather_facts(entry.group);
    for (const auto& r : run_group_checks(facts)) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.outcome != Outcome::Fail);
    }
  }
}

TEST_CASE("random permutation groups: C verdict, decomposition and SC agree with brute force") {
  std::mt19937_64 rng(kSeed);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 25; ++trial) {
    const std::size_t degree = 4 + trial % 2;
    std::vector<Permutation> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(random_permutation(rng, degree));
    const auto g = group_from_permutations(degree, gens);
    if (g.order() > 24) continue;
    ++tested;
    CAPTURE(g.order());
    const bool brute = oracle::is_c_group(g);
    CHECK(is_c_group(g).c_group == brute);
    CHECK(cernikova_decompose(g).decomposition.has_value() == brute);
    CHECK(is_sc_group(g) == oracle::is_sc_group(g));
  }
  CHECK(tested >= 10);
}

TEST_CASE("direct products: C verdict is the conjunction of the factors'") {
  std::mt19937_64 rng(kSeed + 1);
  const auto small = entries_up_to(12);
  for (int trial = 0; trial < 25; ++trial) {
    const auto* a = small[rng() % small.size()];
    const auto* b = small[rng() % small.size()];
    if (a->group.order() * b->group.order() > 48) continue;
    CAPTURE(a->name);
    CAPTURE(b->name);
    const auto product = direct_product(a->group, b->group);
    CHECK(oracle::is_c_group(product) == (oracle::is_c_group(a->group) && oracle::is_c_group(b->group)));
    CHECK(is_c_group(product).c_group == (is_c_group(a->group).c_group && is_c_group(b->group).c_group));
  }
}

TEST_CASE("heredity: subgroups and quotients of C-groups") {
  for (const auto* e : entries_up_to(36)) {
    if (!oracle::is_c_group(e->group)) continue;
    CAPTURE(e->name);
    const auto& g = e->group;
    for (const auto& h : oracle::subgroups(g)) {
      const auto sub = subgroup_as_group(make_subgroup(g, h)).group;
      CHECK(oracle::is_c_group(sub));
      if (oracle::is_normal(g, h) && h.size() > 1) CHECK(oracle::is_c_group(quotient(g, make_subgroup(g, h)).group));
    }
  }
}

TEST_CASE("supplements of H in a C-group contain a permutable complement (all pairs)") {
  for (const auto* e : entries_up_to(24)) {
    const auto& g = e->group;
    if (!oracle::is_c_group(g)) continue;
    CAPTURE(e->name);
    const auto lattice = oracle::subgroups(g);
    for (const auto& h : lattice)
      for (const auto& s : lattice) {
        if (oracle::product_set_size(g, h, s) != g.order()) continue;
        bool found = false;
        for (const auto& k : oracle::complements(g, lattice, h)) found = found || oracle::subset(k, s);
        REQUIRE(found);
        const auto refined = refine_supplement(g, make_subgroup(g, h), make_subgroup(g, s));
        CHECK(oracle::subset(refined.elements(), s));
        CHECK(oracle::is_permutable_complement(g, h, refined.elements()));
      }
  }
}

TEST_CASE("C-groups are metabelian, with prime-order minimal normal subgroups and squarefree exponent") {
  for (const auto& e : catalog()) {
    const auto& g = e.group;
    const bool c = oracle::is_c_group(g);
    CAPTURE(e.name);
    if (is_abelian(g)) CHECK(c == is_squarefree(oracle::exponent(g)));
    if (!c) continue;
    CHECK(oracle::is_abelian(g, oracle::derived(g)));
    CHECK(is_squarefree(oracle::exponent(g)));
    const auto lattice = oracle::subgroups(g);
    for (const auto& n : lattice) {
      if (n.size() == 1 || !oracle::is_normal(g, n)) continue;
      bool minimal = true;
      for (const auto& m : lattice)
        if (m.size() > 1 && m.size() < n.size() && oracle::subset(m, n) && oracle::is_normal(g, m)) minimal = false;
      if (minimal) CHECK(is_prime(n.size()));
    }
  }
}

TEST_CASE("complements move with conjugation") {
  std::mt19937_64 rng(kSeed + 2);
  for (const auto* e : entries_up_to(24)) {
    const auto& g = e->group;
    const auto lattice = all_subgroups(g);
    const auto brute = oracle::subgroups(g);
    for (int trial = 0; trial < 5; ++trial) {
      const auto& h = lattice[rng() % lattice.size()];
      const auto x = static_cast<Element>(rng() % g.order());
      std::vector<oracle::Set> moved;
      for (const auto& k : permutable_complements(lattice, h)) moved.push_back(conjugate_subgroup(k, x).elements());
      std::sort(moved.begin(), moved.end());
      oracle::Set hx;
      for (auto y : h.elements()) hx.push_back(oracle::conj(g, y, x));
      std::sort(hx.begin(), hx.end());
      CHECK(moved == oracle::complements(g, brute, hx));
    }
  }
}

TEST_CASE("trivial radical in a C-group means the lines span") {
  for (const auto* e : entries_up_to(36)) {
    const auto& g = e->group;
    if (!oracle::is_c_group(g)) continue;
    CAPTURE(e->name);
    for (const auto& a : oracle::subgroups(g)) {
      if (a.size() == 1 || !oracle::is_normal(g, a) || !oracle::is_abelian(g, a)) continue;
      CHECK(oracle::radical(g, a) == oracle::Set{0});
      const auto split = split_abelian_normal(g, make_subgroup(g, a));
      REQUIRE(split.ok);
      std::size_t product = 1;
      for (const auto& line : split.lines) {
        product *= line.order();
        CHECK(is_prime(line.order()));
        CHECK(oracle::is_normal(g, line.elements()));
      }
      CHECK(product == a.size());
    }
  }
}
