#include <doctest.h>

#include "oracles.hpp"
#include "permutable/catalog.hpp"
#include "permutable/lattice.hpp"

using namespace permutable;

namespace {

std::vector<std::vector<long long>> c4_table() { return {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}; }

std::vector<std::vector<long long>> klein_table() { return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("tables: trivial, Klein four and identity relabelling") {
  const auto trivial = group_from_table({{0}});
  CHECK(trivial.order() == 1);

  const auto v4 = group_from_table(klein_table());
  CHECK(v4.order() == 4);
  CHECK(exponent(v4) == 2);

  // identity stored at index 1
  const auto c2 = group_from_table({{1, 0}, {0, 1}});
  CHECK(c2.order() == 2);
  CHECK(c2.mul(0, 1) == 1);
  CHECK(c2.mul(1, 1) == 0);
}

TEST_CASE("tables: each violated axiom is reported") {
  auto corrupted = c4_table();
  corrupted[1][2] = 0;
  CHECK(kind_of([&] { group_from_table(corrupted); }) == ErrorKind::NotAssociative);
  CHECK(kind_of([] { group_from_table({{0, 0}, {0, 0}}); }) == ErrorKind::NoIdentity);
  CHECK(kind_of([] { group_from_table({{0, 1}, {1, 1}}); }) == ErrorKind::NotBijectiveRows);
  CHECK(kind_of([] { group_from_table({{0, 5}, {1, 0}}); }) == ErrorKind::BadTable);
  CHECK(kind_of([] { group_from_table({{0, 1}}); }) == ErrorKind::BadTable);

  // above the full-check size a corruption is still rejected
  const auto c100 = cyclic(100);
  std::vector<std::vector<long long>> big(100, std::vector<long long>(100));
  for (Element x = 0; x < 100; ++x)
    for (Element y = 0; y < 100; ++y) big[x][y] = c100.mul(x, y);
  CHECK_NOTHROW(group_from_table(big));
  std::swap(big[7][3], big[7][4]);
  CHECK_THROWS_AS(group_from_table(big), Error);
}

TEST_CASE("tables: construction cap") {
  Limits small;
  small.max_order = 3;
  CHECK(kind_of([&] { group_from_table(c4_table(), small); }) == ErrorKind::OrderCapExceeded);
}

TEST_CASE("permutations: closure, numbering and errors") {
  const auto s3 = group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_abelian(s3));
  CHECK(oracle::center(s3) == oracle::Set{0});
  CHECK(s3.label(0) == "()");
  CHECK(s3.label(1) == "(0 1 2)");
  CHECK(s3.label(2) == "(0 1)");

  CHECK(group_from_permutations(4, {{1, 0, 3, 2}}).order() == 2);
  CHECK(group_from_permutations(2, {}).order() == 1);
  CHECK(kind_of([] { group_from_permutations(3, {{0, 0, 1}}); }) == ErrorKind::NotPermutation);
  CHECK(kind_of([] { symmetric(6); }) == ErrorKind::OrderCapExceeded);
}

TEST_CASE("products: direct, semidirect, trivial action") {
  const auto c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(c6.order() == 6);
  CHECK(c6.element_order(1 * 3 + 1) == 6);

  const auto s3 = generalized_dihedral(cyclic(3));
  CHECK(s3.order() == 6);
  CHECK(center(s3).is_trivial());
  CHECK(oracle::center(s3) == oracle::Set{0});

  const auto trivial_action = semidirect_product(GAction::trivial(cyclic(2), cyclic(3)));
  const auto direct = direct_product(cyclic(2), cyclic(3));
  CHECK(std::equal(trivial_action.table().begin(), trivial_action.table().end(), direct.table().begin()));

  // row 1 is not an automorphism of C3
  CHECK(kind_of([] { GAction(cyclic(2), cyclic(3), {0, 1, 2, 0, 1, 1}); }) == ErrorKind::InvalidAction);
  // inversion does not compose like a C3 action
  CHECK(kind_of([] { GAction(cyclic(3), cyclic(3), {0, 1, 2, 0, 2, 1, 0, 2, 1}); }) == ErrorKind::InvalidAction);
}

TEST_CASE("products: semidirect multiplication rule") {
  const auto g = semidirect_cyclic(7, 3, 2);
  // (b1,a1)(b2,a2) = (b1 b2, act[b2^-1](a1) a2) with act[b](a) = 2^b a
  for (Element b1 = 0; b1 < 3; ++b1)
    for (Element a1 = 0; a1 < 7; ++a1)
      for (Element b2 = 0; b2 < 3; ++b2)
        for (Element a2 = 0; a2 < 7; ++a2) {
          const Element b_inv = (3 - b2) % 3;
          std::size_t scale = 1;
          for (Element i = 0; i < b_inv; ++i) scale *= 2;
          const Element expected = ((b1 + b2) % 3) * 7 + static_cast<Element>((a1 * scale + a2) % 7);
          REQUIRE(g.mul(b1 * 7 + a1, b2 * 7 + a2) == expected);
        }
}

TEST_CASE("products: semidirect with inversion on C_p has trivial centre") {
  for (std::size_t p : {3, 5, 7, 11}) {
    const auto g = generalized_dihedral(cyclic(p));
    CHECK(g.order() == 2 * p);
    CHECK(oracle::center(g).size() == 1);
    CHECK(center(g).is_trivial());
  }
}

TEST_CASE("subgroup closure") {
  const auto s3 = symmetric(3);
  CHECK(subgroup_closure(s3, std::vector<Element>{}).is_trivial());
  const auto c6 = cyclic(6);
  CHECK(subgroup_closure(c6, std::vector<Element>{2}).order() == 3);
  const Permutation t01{1, 0, 2}, t12{0, 2, 1};
  const auto g = group_from_permutations(3, {t01, t12});
  CHECK(subgroup_closure(g, std::vector<Element>{1, 2}).is_whole());
  CHECK(oracle::closure(g, {1, 2}).size() == 6);
}

TEST_CASE("lattice: small examples") {
  CHECK(all_subgroups(cyclic(4)).size() == 3);
  CHECK(all_subgroups(group_from_table(klein_table())).size() == 5);

  const auto s3 = symmetric(3);
  const auto lattice = all_subgroups(s3);
  REQUIRE(lattice.size() == 6);
  std::vector<std::size_t> orders;
  for (const auto& h : lattice) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  std::vector<oracle::Set> got;
  for (const auto& h : lattice) got.push_back(h.elements());
  auto expected = oracle::subgroups_by_subsets(s3);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
}

TEST_CASE("lattice: matches brute force over the catalog") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const auto lattice = all_subgroups(entry.group);
    for (std::size_t i = 1; i < lattice.size(); ++i) CHECK(lattice_less(lattice[i - 1], lattice[i]));
    std::vector<oracle::Set> got;
    for (const auto& h : lattice) got.push_back(h.elements());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::subgroups(entry.group));
    if (entry.group.order() <= 12) CHECK(got.size() == oracle::subgroups_by_subsets(entry.group).size());
  }
}

TEST_CASE("lattice: caps") {
  Limits limits;
  limits.lattice_max_order = 10;
  CHECK(kind_of([&] { all_subgroups(cyclic(12), limits); }) == ErrorKind::SubgroupLimitExceeded);
  limits = Limits{};
  limits.max_subgroups = 10;
  CHECK(kind_of([&] { all_subgroups(power(cyclic(2), 4), limits); }) == ErrorKind::SubgroupLimitExceeded);
}

TEST_CASE("structure: centre, derived subgroup, quotient, exponent") {
  const auto s3 = symmetric(3);
  CHECK(center(s3).is_trivial());
  const auto d = derived_subgroup(s3);
  CHECK(d.order() == 3);
  CHECK(d.elements() == oracle::derived(s3));

  const auto c6 = cyclic(6);
  const auto q = quotient(c6, subgroup_closure(c6, std::vector<Element>{2}));
  CHECK(q.group.order() == 2);
  CHECK(q.projection(3) == 1);
  CHECK(q.projection(2) == 0);

  CHECK(exponent(group_from_table(klein_table())) == 2);
  CHECK(kind_of([&] { quotient(s3, cyclic_subgroup(s3, 2)); }) == ErrorKind::NotNormal);
}

TEST_CASE("structure: catalog-wide invariants against brute force") {
  for (const auto& entry : catalog()) {
    CAPTURE(entry.name);
    const auto& g = entry.group;
    CHECK(center(g).elements() == oracle::center(g));
    const auto d = derived_subgroup(g);
    CHECK(d.elements() == oracle::derived(g));
    CHECK(is_normal(g, d));
    CHECK(is_abelian(quotient(g, d).group));
    CHECK(exponent(g) == oracle::exponent(g));
    for (Element x = 0; x < g.order(); ++x) REQUIRE(g.element_order(x) == oracle::order_of(g, x));

    for (const auto& n : normal_subgroups(g, all_subgroups(g))) {
      const auto q = quotient(g, n);
      CHECK(q.group.order() * n.order() == g.order());
      for (Element x = 0; x < g.order(); ++x)
        for (Element y = 0; y < g.order(); ++y)
          REQUIRE(q.projection(g.mul(x, y)) == q.group.mul(q.projection(x), q.projection(y)));
    }
  }
}

TEST_CASE("structure: closures have order dividing the group order") {
  for (const auto& entry : catalog()) {
    const auto& g = entry.group;
    for (Element x = 0; x < g.order(); x += 3)
      for (Element y = 1; y < g.order(); y += 5) {
        const auto h = subgroup_closure(g, std::vector<Element>{x, y});
        REQUIRE(g.order() % h.order() == 0);
      }
  }
}

TEST_CASE("homomorphisms") {
  const auto c4 = cyclic(4), c2 = cyclic(2);
  const Homomorphism proj(c4, c2, {0, 1, 0, 1});
  CHECK(proj.is_surjective());
  CHECK_FALSE(proj.is_injective());
  CHECK(proj.kernel().order() == 2);
  CHECK(kind_of([&] { Homomorphism(c4, c2, {0, 1, 1, 1}); }) == ErrorKind::NotHomomorphism);

  const auto h = subgroup_as_group(cyclic_subgroup(symmetric(3), 1));
  CHECK(h.group.order() == 3);
  CHECK(h.embedding.is_injective());
}

TEST_CASE("make_subgroup validates closure") {
  const auto c4 = cyclic(4);
  CHECK(make_subgroup(c4, std::vector<Element>{0, 2}).order() == 2);
  CHECK(kind_of([&] { make_subgroup(c4, std::vector<Element>{0, 1}); }) == ErrorKind::NotASubgroup);
}
