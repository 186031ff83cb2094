#include "permutable/catalog.hpp"

#include <numeric>

namespace permutable {

FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::BadParams, "dihedral groups need at least 3 points");
  Permutation rotation(n), reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotation[i] = static_cast<Element>((i + 1) % n);
    reflection[i] = static_cast<Element>((n - i) % n);
  }
  Limits limits;
  limits.max_order = 2 * n;
  return group_from_permutations(n, {rotation, reflection}, limits);
}

FiniteGroup quaternion8() {
  const Permutation i{1, 2, 3, 0, 5, 6, 7, 4};
  const Permutation j{4, 7, 6, 5, 2, 1, 0, 3};
  return group_from_permutations(8, {i, j});
}

FiniteGroup symmetric(std::size_t n) {
  Permutation cycle(n), swap(n);
  std::iota(swap.begin(), swap.end(), Element{0});
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Element>((i + 1) % n);
  if (n >= 2) std::swap(swap[0], swap[1]);
  return group_from_permutations(n, {cycle, swap});
}

FiniteGroup alternating4() { return group_from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

FiniteGroup special_linear_2_3() {
  // Action on the eight non-zero vectors of F_3^2, vector (x, y) numbered in
  // the order they are listed below.
  std::vector<std::pair<int, int>> vectors;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vectors.emplace_back(x, y);
  auto index_of = [&](int x, int y) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
      if (vectors[i] == std::pair{((x % 3) + 3) % 3, ((y % 3) + 3) % 3}) return static_cast<Element>(i);
    return Element{0};
  };
  auto matrix = [&](int a, int b, int c, int d) {
    Permutation p(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      const auto [x, y] = vectors[i];
      p[i] = index_of(a * x + b * y, c * x + d * y);
    }
    return p;
  };
  return group_from_permutations(8, {matrix(1, 1, 0, 1), matrix(0, 2, 1, 0)});
}

FiniteGroup heisenberg(std::size_t p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::BadParams, "heisenberg group needs an odd prime");
  auto space = direct_product(cyclic(p), cyclic(p));
  std::vector<Element> table(p * p * p);
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b) table[k * p * p + a * p + b] = static_cast<Element>(((a + k * b) % p) * p + b);
  return semidirect_product(GAction(cyclic(p), std::move(space), std::move(table)));
}

FiniteGroup semidirect_cyclic(std::size_t n, std::size_t m, std::size_t r) {
  std::vector<Element> table(m * n);
  std::size_t scale = 1;
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < n; ++a) table[b * n + a] = static_cast<Element>(a * scale % n);
    scale = scale * r % n;
  }
  return semidirect_product(GAction(cyclic(m), cyclic(n), std::move(table)));
}

FiniteGroup generalized_dihedral(const FiniteGroup& abelian) {
  const auto n = abelian.order();
  std::vector<Element> table(2 * n);
  for (Element a = 0; a < n; ++a) {
    table[a] = a;
    table[n + a] = abelian.inv(a);
  }
  return semidirect_product(GAction(cyclic(2), abelian, std::move(table)));
}

FiniteGroup power(const FiniteGroup& g, std::size_t k) {
  if (k == 0) return cyclic(1);
  auto out = g;
  for (std::size_t i = 1; i < k; ++i) out = direct_product(out, g);
  return out;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  const auto C = [](std::size_t n) { return cyclic(n); };
  const auto X = [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); };
  const auto s3 = symmetric(3);
  const auto c2sq = X(C(2), C(2));
  const auto c2cube = X(c2sq, C(2));
  const auto f21 = semidirect_cyclic(7, 3, 2);

  return {
      {"C1", C(1)},
      {"C2", C(2)},
      {"C3", C(3)},
      {"C4", C(4)},
      {"C2xC2", c2sq},
      {"C5", C(5)},
      {"C6", C(6)},
      {"S3", s3},
      {"C7", C(7)},
      {"C8", C(8)},
      {"C4xC2", X(C(4), C(2))},
      {"C2^3", c2cube},
      {"D4", dihedral(4)},
      {"Q8", quaternion8()},
      {"C9", C(9)},
      {"C3xC3", X(C(3), C(3))},
      {"C10", C(10)},
      {"D5", dihedral(5)},
      {"C11", C(11)},
      {"C12", C(12)},
      {"C6xC2", X(C(6), C(2))},
      {"D6", dihedral(6)},
      {"A4", alternating4()},
      {"Dic3", semidirect_cyclic(3, 4, 2)},
      {"C13", C(13)},
      {"C14", C(14)},
      {"D7", dihedral(7)},
      {"C15", C(15)},
      {"C16", C(16)},
      {"C4xC4", X(C(4), C(4))},
      {"C8xC2", X(C(8), C(2))},
      {"C4xC2^2", X(C(4), c2sq)},
      {"C2^4", X(c2cube, C(2))},
      {"D8", dihedral(8)},
      {"D4xC2", X(dihedral(4), C(2))},
      {"Q8xC2", X(quaternion8(), C(2))},
      {"C17", C(17)},
      {"C18", C(18)},
      {"C6xC3", X(C(6), C(3))},
      {"D9", dihedral(9)},
      {"S3xC3", X(s3, C(3))},
      {"C3^2:C2", generalized_dihedral(X(C(3), C(3)))},
      {"C19", C(19)},
      {"C20", C(20)},
      {"C10xC2", X(C(10), C(2))},
      {"D10", dihedral(10)},
      {"F20", semidirect_cyclic(5, 4, 2)},
      {"Dic5", semidirect_cyclic(5, 4, 4)},
      {"C21", C(21)},
      {"F21", f21},
      {"C22", C(22)},
      {"D11", dihedral(11)},
      {"C23", C(23)},
      {"C24", C(24)},
      {"C12xC2", X(C(12), C(2))},
      {"C6xC2^2", X(C(6), c2sq)},
      {"S4", symmetric(4)},
      {"SL(2,3)", special_linear_2_3()},
      {"A4xC2", X(alternating4(), C(2))},
      {"D12", dihedral(12)},
      {"S3xC4", X(s3, C(4))},
      {"S3xC2^2", X(s3, c2sq)},
      {"Dic3xC2", X(semidirect_cyclic(3, 4, 2), C(2))},
      {"C3:C8", semidirect_cyclic(3, 8, 2)},
      {"Q8xC3", X(quaternion8(), C(3))},
      {"D4xC3", X(dihedral(4), C(3))},
      {"Heis27", heisenberg(3)},
      {"C30", C(30)},
      {"D15", dihedral(15)},
      {"S3xC5", X(s3, C(5))},
      {"D5xC3", X(dihedral(5), C(3))},
      {"S3xS3", X(s3, s3)},
      {"C6xC6", X(C(6), C(6))},
      {"C42", C(42)},
      {"F42", semidirect_cyclic(7, 6, 3)},
      {"F21xC2", X(f21, C(2))},
      {"D21", dihedral(21)},
      {"S3xC7", X(s3, C(7))},
      {"D7xC3", X(dihedral(7), C(3))},
      {"C2^4xC3", X(X(c2cube, C(2)), C(3))},
      {"S3xC2^3", X(s3, c2cube)},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<FiniteGroup> catalog_group(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e.group;
  return std::nullopt;
}

}  // namespace permutable
