#include <doctest.h>

#include "oracles.hpp"
#include "permutable/catalog.hpp"
#include "permutable/complement.hpp"
#include "permutable/lattice.hpp"

using namespace permutable;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

Subgroup of(const FiniteGroup& g, std::vector<Element> seeds) { return subgroup_closure(g, seeds); }

FiniteGroup named(const std::string& name) { return *catalog_group(name); }

/// {(x, 0)} and {(0, x)} for x in the derived subgroup of S3, inside S3 x S3.
std::pair<Subgroup, Subgroup> s3_square_lines(const FiniteGroup& g) {
  const auto c3 = derived_subgroup(symmetric(3)).elements();
  std::vector<Element> left, right;
  for (auto x : c3) {
    left.push_back(x * 6);
    right.push_back(x);
  }
  return {of(g, left), of(g, right)};
}

}  // namespace

TEST_CASE("complements in S3 and C4") {
  const auto s3 = symmetric(3);
  const auto c3 = derived_subgroup(s3);
  const auto complements = permutable_complements(s3, c3);
  REQUIRE(complements.size() == 3);
  for (const auto& k : complements) CHECK(k.order() == 2);
  const auto lattice = oracle::subgroups(s3);
  CHECK(oracle::complements(s3, lattice, c3.elements()).size() == 3);

  const auto c4 = cyclic(4);
  CHECK(permutable_complements(c4, of(c4, {2})).empty());
}

TEST_CASE("complements: degenerate subgroups") {
  for (const auto& entry : catalog()) {
    if (entry.group.order() > 24) continue;
    const auto& g = entry.group;
    const auto all = permutable_complements(g, whole_group(g));
    REQUIRE(all.size() == 1);
    CHECK(all.front().is_trivial());
    const auto none = permutable_complements(g, trivial_subgroup(g));
    REQUIRE(none.size() == 1);
    CHECK(none.front().is_whole());
  }
  CHECK(is_c_group(cyclic(1)).c_group);
}

TEST_CASE("complements agree with the set-product definition") {
  for (const auto& entry : catalog()) {
    if (entry.group.order() > 24) continue;
    CAPTURE(entry.name);
    const auto& g = entry.group;
    const auto lattice = all_subgroups(g);
    const auto brute = oracle::subgroups(g);
    for (const auto& h : lattice) {
      std::vector<oracle::Set> got;
      for (const auto& k : permutable_complements(lattice, h)) got.push_back(k.elements());
      std::sort(got.begin(), got.end());
      REQUIRE(got == oracle::complements(g, brute, h.elements()));
    }
  }
}

TEST_CASE("is_c_group: verdicts and witnesses") {
  const auto c4 = is_c_group(cyclic(4));
  CHECK_FALSE(c4.c_group);
  REQUIRE(c4.witness);
  CHECK(c4.witness->order() == 2);

  const auto heis = named("Heis27");
  CHECK(heis.order() == 27);
  CHECK(exponent(heis) == 3);
  const auto v = is_c_group(heis);
  CHECK_FALSE(v.c_group);
  REQUIRE(v.witness);
  CHECK(*v.witness == center(heis));
  CHECK(v.witness->elements() == oracle::center(heis));

  for (const auto& entry : catalog())
    if (is_squarefree(entry.group.order())) {
      CAPTURE(entry.name);
      CHECK(is_c_group(entry.group).c_group);
    }
}

TEST_CASE("is_c_group matches brute force over the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const bool verdict = is_c_group(entry.group).c_group;
    CHECK(verdict == oracle::is_c_group(entry.group));
    CHECK(is_c_group_structural(entry.group) == verdict);
  }
}

TEST_CASE("find_complement_within agrees with the lattice") {
  for (const std::string name : {"S3", "D6", "C6xC2", "A4", "S3xS3", "Heis27", "F21"}) {
    CAPTURE(name);
    const auto g = named(name);
    const auto lattice = all_subgroups(g);
    for (const auto& h : lattice) {
      const bool exists = !permutable_complements(lattice, h).empty();
      const auto found = find_complement_within(h, whole_group(g));
      REQUIRE(found.has_value() == exists);
      if (found) CHECK(oracle::is_permutable_complement(g, h.elements(), found->elements()));
    }
  }
}

TEST_CASE("refine_supplement") {
  const auto s3 = symmetric(3);
  const auto c3 = derived_subgroup(s3);
  const auto k = refine_supplement(s3, c3, whole_group(s3));
  CHECK(k.order() == 2);

  const auto t = cyclic_subgroup(s3, 2);
  CHECK(refine_supplement(s3, c3, t) == t);

  const auto c4 = cyclic(4);
  CHECK(kind_of([&] { refine_supplement(c4, of(c4, {2}), whole_group(c4)); }) == ErrorKind::NoComplementFound);
  const auto other = cyclic_subgroup(s3, s3.mul(2, 1));
  REQUIRE(other.order() == 2);
  REQUIRE_FALSE(other == t);
  CHECK(kind_of([&] { refine_supplement(s3, t, other); }) == ErrorKind::NotASupplement);
}

TEST_CASE("lift_complement") {
  const auto g = power(cyclic(2), 3);  // coordinates (x, y, z) at index 4x + 2y + z
  const auto h = of(g, {4});
  const auto n = of(g, {2});
  const auto s = of(g, {2, 1});
  const auto k = lift_complement(g, h, n, s);
  CHECK(k.order() == 4);
  CHECK(k.is_subgroup_of(s));
  CHECK(oracle::is_permutable_complement(g, h.elements(), k.elements()));
  CHECK(join(k, n) == s);

  CHECK(lift_complement(g, h, trivial_subgroup(g), of(g, {2, 1})) == of(g, {2, 1}));

  const auto s3 = symmetric(3);
  const auto c3 = derived_subgroup(s3);
  CHECK(kind_of([&] { lift_complement(s3, c3, c3, c3); }) == ErrorKind::HypothesisViolated);
  CHECK(kind_of([&] { lift_complement(s3, c3, cyclic_subgroup(s3, 2), whole_group(s3)); }) ==
        ErrorKind::HypothesisViolated);
}

TEST_CASE("lift_through_kernel finds K with KN = S whenever the subgroups of S contain one") {
  for (const std::string name : {"S3xS3", "C6xC6", "D6", "S3xC2^2", "C3^2:C2"}) {
    CAPTURE(name);
    const auto g = named(name);
    const auto lattice = all_subgroups(g);
    std::vector<std::vector<Subgroup>> complements;
    for (const auto& h : lattice) complements.push_back(permutable_complements(lattice, h));
    for (const auto& n : normal_subgroups(g, lattice)) {
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& h = lattice[i];
        for (const auto& s : lattice) {
          if (!n.is_subgroup_of(s)) continue;
          const bool exists = std::any_of(complements[i].begin(), complements[i].end(), [&](const Subgroup& k) {
            return k.is_subgroup_of(s) && join(k, n) == s;
          });
          const auto found = lift_through_kernel(h, n, s);
          CAPTURE(oracle::text(h.elements()));
          CAPTURE(oracle::text(n.elements()));
          CAPTURE(oracle::text(s.elements()));
          REQUIRE(found.has_value() == exists);
          if (found) {
            CHECK(found->is_subgroup_of(s));
            CHECK(join(*found, n) == s);
            CHECK(oracle::is_permutable_complement(g, h.elements(), found->elements()));
          }
        }
      }
    }
  }
}

TEST_CASE("radical") {
  const auto c4 = cyclic(4);
  CHECK(radical(c4, whole_group(c4)).order() == 2);

  const auto v4 = power(cyclic(2), 2);
  CHECK(radical(v4, whole_group(v4)).is_trivial());

  const auto g = named("S3xC3");  // (s, c) at index 3s + c
  std::vector<Element> a_seeds;
  for (auto x : derived_subgroup(symmetric(3)).elements()) a_seeds.push_back(x * 3);
  a_seeds.push_back(1);
  const auto a = of(g, a_seeds);
  REQUIRE(a.order() == 9);
  CHECK(radical(g, a).is_trivial());
  CHECK(oracle::radical(g, a.elements()) == oracle::Set{0});

  CHECK(radical(g, trivial_subgroup(g)).is_trivial());
  const auto s3 = symmetric(3);
  CHECK(kind_of([&] { radical(s3, whole_group(s3)); }) == ErrorKind::NotAbelianNormal);
  CHECK(kind_of([&] { radical(s3, cyclic_subgroup(s3, 2)); }) == ErrorKind::NotAbelianNormal);
}

TEST_CASE("radical matches brute force on abelian normal subgroups") {
  for (const auto& entry : catalog()) {
    if (entry.group.order() > 24) continue;
    CAPTURE(entry.name);
    const auto& g = entry.group;
    for (const auto& a : normal_subgroups(g, all_subgroups(g))) {
      if (!is_abelian(a)) continue;
      CHECK(radical(g, a).elements() == oracle::radical(g, a.elements()));
    }
  }
}

TEST_CASE("split_abelian_normal") {
  const auto s3 = symmetric(3);
  const auto c3 = derived_subgroup(s3);
  const auto one = split_abelian_normal(s3, c3);
  REQUIRE(one.ok);
  REQUIRE(one.lines.size() == 1);
  CHECK(one.lines.front() == c3);

  const auto c4 = cyclic(4);
  const auto bad = split_abelian_normal(c4, whole_group(c4));
  CHECK_FALSE(bad.ok);
  CHECK(bad.failed_stage == "sylow_not_elementary");
  REQUIRE(bad.radical);
  CHECK(bad.radical->order() == 2);

  const auto g = named("S3xS3");
  const auto a = derived_subgroup(g);
  REQUIRE(a.order() == 9);
  const auto two = split_abelian_normal(g, a);
  REQUIRE(two.ok);
  REQUIRE(two.lines.size() == 2);
  const auto [left, right] = s3_square_lines(g);
  CHECK(((two.lines[0] == left && two.lines[1] == right) || (two.lines[0] == right && two.lines[1] == left)));
  CHECK(oracle::invariant_lines(g, a.elements()).size() == 2);

  const auto a4 = alternating4();
  const auto v4 = derived_subgroup(a4);
  const auto irreducible = split_abelian_normal(a4, v4);
  CHECK_FALSE(irreducible.ok);
  CHECK(irreducible.failed_stage == "lines_do_not_span");
}

TEST_CASE("cernikova_decompose: examples") {
  const auto s3 = symmetric(3);
  const auto r = cernikova_decompose(s3);
  REQUIRE(r.decomposition);
  REQUIRE(r.decomposition->a_generators.size() == 1);
  CHECK(r.decomposition->a_generators[0].order == 3);
  CHECK(is_normal(s3, cyclic_subgroup(s3, r.decomposition->a_generators[0].element)));
  REQUIRE(r.decomposition->b_generators.size() == 1);
  CHECK(r.decomposition->b_generators[0].order == 2);
  CHECK(r.stages.size() == 4);
  CHECK(r.failed_stage.empty());

  const auto c4 = cernikova_decompose(cyclic(4));
  CHECK_FALSE(c4.decomposition);
  CHECK(c4.failed_stage == "decompose_complement");

  const auto g = direct_product(symmetric(3), cyclic(5));
  const auto r30 = cernikova_decompose(g);
  REQUIRE(r30.decomposition);
  REQUIRE(r30.decomposition->a_generators.size() == 1);
  CHECK(r30.decomposition->a_generators[0].order == 3);
  std::vector<std::size_t> b_orders;
  for (const auto& b : r30.decomposition->b_generators) b_orders.push_back(b.order);
  std::sort(b_orders.begin(), b_orders.end());
  CHECK(b_orders == std::vector<std::size_t>{2, 5});
  CHECK(is_c_group(g).c_group);

  const auto heis = cernikova_decompose(named("Heis27"));
  CHECK(heis.failed_stage == "complement_of_derived");
  CHECK(cernikova_decompose(named("A4")).failed_stage == "split_derived");
}

TEST_CASE("cernikova_decompose: oracle equivalence, invariants and round trip") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const auto& g = entry.group;
    const auto r = cernikova_decompose(g);
    CHECK(r.decomposition.has_value() == oracle::is_c_group(g));
    if (!r.decomposition) continue;
    CHECK(check_decomposition(g, *r.decomposition).empty());
    CHECK(r.decomposition->a_subgroup.elements() == oracle::derived(g));
    const auto rebuilt = rebuild_from_decomposition(g, *r.decomposition);
    CHECK(rebuilt.is_isomorphism);
    CHECK(rebuilt.failure.empty());
    // independent re-check of the map
    std::vector<char> hit(g.order(), 0);
    for (auto y : rebuilt.to_parent) hit[y] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(g.order()));
    for (Element x = 0; x < g.order(); ++x)
      for (Element y = 0; y < g.order(); ++y)
        REQUIRE(rebuilt.to_parent[rebuilt.group.mul(x, y)] == g.mul(rebuilt.to_parent[x], rebuilt.to_parent[y]));
  }
}

TEST_CASE("check_decomposition rejects tampered decompositions") {
  const auto s3 = symmetric(3);
  auto d = *cernikova_decompose(s3).decomposition;
  auto wrong_order = d;
  wrong_order.a_generators[0].order = 2;
  CHECK_FALSE(check_decomposition(s3, wrong_order).empty());
  auto not_normal = d;
  std::swap(not_normal.a_generators, not_normal.b_generators);
  std::swap(not_normal.a_subgroup, not_normal.b_subgroup);
  CHECK_FALSE(check_decomposition(s3, not_normal).empty());
}

TEST_CASE("semidirect_c_criterion") {
  const auto s3 = symmetric(3);
  const auto cert = semidirect_c_criterion(s3, cyclic_subgroup(s3, 2), derived_subgroup(s3));
  CHECK(cert.holds);
  CHECK(cert.h_is_c_group);
  CHECK(cert.complements.size() == 2);
  REQUIRE(cert.g_is_c_group);
  CHECK(*cert.g_is_c_group);

  // Heisenberg group: actor C3 at indices 0, 9, 18; space C3 x C3 at 0..8
  const auto heis = named("Heis27");
  const auto h = of(heis, {9});
  std::vector<Element> space(9);
  std::iota(space.begin(), space.end(), Element{0});
  const auto n = of(heis, space);
  const auto bad = semidirect_c_criterion(heis, h, n);
  CHECK_FALSE(bad.holds);
  CHECK(bad.h_is_c_group);

  const auto c4 = cyclic(4);
  CHECK_FALSE(semidirect_c_criterion(c4, whole_group(c4), trivial_subgroup(c4)).holds);
  CHECK(semidirect_c_criterion(s3, whole_group(s3), trivial_subgroup(s3)).holds);

  CHECK(kind_of([&] { semidirect_c_criterion(s3, derived_subgroup(s3), cyclic_subgroup(s3, 2)); }) ==
        ErrorKind::NotSemidirect);
}

TEST_CASE("semidirect_c_criterion is sufficient") {
  for (const auto& entry : catalog()) {
    if (entry.group.order() > 24) continue;
    const auto& g = entry.group;
    const auto lattice = all_subgroups(g);
    for (const auto& n : normal_subgroups(g, lattice))
      for (const auto& h : permutable_complements(lattice, n)) {
        const auto cert = semidirect_c_criterion(g, h, n);
        if (cert.holds) CHECK(oracle::is_c_group(g));
      }
  }
}

TEST_CASE("theta_partition") {
  // trivial action: one class
  const auto g = direct_product(power(cyclic(3), 2), cyclic(2));  // (a, b) at index 2a + b
  const auto p = of(g, {2, 6});
  REQUIRE(p.order() == 9);
  const auto k = of(g, {1});
  const auto lines = split_abelian_normal(g, p).lines;
  REQUIRE(lines.size() == 2);
  CHECK(theta_partition(g, k, p, lines).classes.size() == 1);

  // S3 x S3: each C2 factor inverts only its own line
  const auto sq = named("S3xS3");
  const auto a = derived_subgroup(sq);
  const Element t = 2;  // (0 1) in S3
  const auto k2 = of(sq, {static_cast<Element>(t * 6), t});
  const auto split = split_abelian_normal(sq, a);
  const auto part = theta_partition(sq, k2, a, split.lines);
  CHECK(part.classes.size() == 2);
  CHECK(part.collapsed.is_trivial());

  // inversion on both lines: one class, and every cyclic subgroup of P is normal
  const auto dih = named("C3^2:C2");
  const auto pp = derived_subgroup(dih);
  REQUIRE(pp.order() == 9);
  const auto kk = of(dih, {9});
  const auto inv_lines = split_abelian_normal(dih, pp).lines;
  const auto one = theta_partition(dih, kk, pp, inv_lines);
  CHECK(one.classes.size() == 1);
  CHECK(one.collapsed.order() == 3);
  for (auto x : pp.elements()) {
    if (x == 0) continue;
    CHECK(oracle::is_normal(dih, oracle::closure(dih, {x})));
  }

  // a diagonal line is not invariant under K
  const auto [left, right] = s3_square_lines(sq);
  const auto diag = of(sq, {static_cast<Element>(left.elements()[1] + right.elements()[1])});
  REQUIRE(diag.order() == 3);
  CHECK(kind_of([&] { theta_partition(sq, k2, a, {diag}); }) == ErrorKind::LineNotInvariant);
  CHECK(kind_of([&] { theta_partition(sq, k2, whole_group(sq), {}); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("is_sc_group") {
  CHECK(is_sc_group(cyclic(1)));
  CHECK_FALSE(is_sc_group(cyclic(4)));
  for (const auto& entry : catalog()) {
    if (entry.group.order() > 24) continue;
    CAPTURE(entry.name);
    const bool sc = is_sc_group(entry.group);
    CHECK(sc == oracle::is_sc_group(entry.group));
    CHECK(sc == is_c_group(entry.group).c_group);
  }
  CHECK(kind_of([] { is_sc_group(named("Heis27")); }) == ErrorKind::SubgroupLimitExceeded);
}
