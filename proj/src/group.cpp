#include "permutable/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

namespace permutable {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotBijectiveRows: return "NotBijectiveRows";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::SubgroupLimitExceeded: return "SubgroupLimitExceeded";
    case ErrorKind::NotASupplement: return "NotASupplement";
    case ErrorKind::NoComplementFound: return "NoComplementFound";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotAbelianNormal: return "NotAbelianNormal";
    case ErrorKind::NotSemidirect: return "NotSemidirect";
    case ErrorKind::LineNotInvariant: return "LineNotInvariant";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::NoChainFound: return "NoChainFound";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("PERMUTABLE_MAX_ORDER"); env && *env) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) limits.apply_max_order(static_cast<std::size_t>(value));
  }
  return limits;
}

void Limits::apply_max_order(std::size_t order) {
  lattice_max_order = order;
  max_order = std::max(max_order, order);
}

namespace {

constexpr std::size_t kFullAssociativityCap = 64;
constexpr std::size_t kAssociativitySamples = 10000;

std::string triple(Element x, Element y, Element z) {
  std::ostringstream os;
  os << "(" << x << ", " << y << ", " << z << ")";
  return os.str();
}

std::vector<Element> greedy_generators(std::size_t n, const std::vector<Element>& mul,
                                       const std::vector<Element>& elements) {
  std::vector<Element> gens;
  std::vector<char> in(n, 0);
  std::vector<Element> list{0};
  in[0] = 1;
  for (auto x : elements) {
    if (in[x]) continue;
    gens.push_back(x);
    // Re-close from scratch with the enlarged generating set.
    std::fill(in.begin(), in.end(), 0);
    list.assign(1, 0);
    in[0] = 1;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (auto g : gens) {
        const auto y = mul[std::size_t{list[i]} * n + g];
        if (!in[y]) {
          in[y] = 1;
          list.push_back(y);
        }
      }
  }
  return gens;
}

Limits uncapped() {
  Limits l;
  l.max_order = std::numeric_limits<std::size_t>::max();
  return l;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Element> table, std::vector<std::string> labels,
                                    const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::BadTable, "empty table");
  if (n > limits.max_order)
    throw Error(ErrorKind::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_order));
  if (table.size() != n * n) throw Error(ErrorKind::BadTable, "table is not square");
  if (!labels.empty() && labels.size() != n) throw Error(ErrorKind::BadTable, "label count differs from order");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw Error(ErrorKind::BadTable, "entry at (" + std::to_string(i / n) + ", " + std::to_string(i % n) +
                                           ") is out of range");
  auto at = [&](Element x, Element y) { return table[std::size_t{x} * n + y]; };

  std::optional<Element> identity_index;
  for (Element e = 0; e < n && !identity_index; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity_index = e;
  }
  if (!identity_index) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");

  if (*identity_index != 0) {
    const Element e = *identity_index;
    auto swap_label = [e](Element x) -> Element { return x == 0 ? e : (x == e ? 0 : x); };
    std::vector<Element> relabeled(n * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        relabeled[std::size_t{swap_label(x)} * n + swap_label(y)] = swap_label(at(x, y));
    table = std::move(relabeled);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  if (n <= kFullAssociativityCap) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z)))
            throw Error(ErrorKind::NotAssociative, "fails on triple " + triple(x, y, z));
  }

  std::vector<char> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element y = 0; y < n; ++y) {
      if (seen[at(x, y)]++) throw Error(ErrorKind::NotBijectiveRows, "row " + std::to_string(x) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element y = 0; y < n; ++y) {
      if (seen[at(y, x)]++)
        throw Error(ErrorKind::NotBijectiveRows, "column " + std::to_string(x) + " repeats an entry");
    }
  }

  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) {
        inverse[x] = y;
        found = true;
      }
    if (!found) throw Error(ErrorKind::NoInverse, "element " + std::to_string(x) + " has no inverse");
  }

  if (n > kFullAssociativityCap) {
    std::mt19937_64 rng(0x5eedu + n);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      const auto x = pick(rng), y = pick(rng), z = pick(rng);
      if (at(at(x, y), z) != at(x, at(y, z)))
        throw Error(ErrorKind::NotAssociative, "fails on triple " + triple(x, y, z));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->inv = std::move(inverse);
  impl->orders.resize(n);
  for (Element x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (Element y = x; y != 0; y = table[std::size_t{y} * n + x]) ++k;
    impl->orders[x] = x == 0 ? 1 : k;
  }
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), Element{0});
  impl->generators = greedy_generators(n, table, all);
  impl->mul = std::move(table);
  impl->labels = std::move(labels);
  return FiniteGroup(std::move(impl));
}

Element FiniteGroup::power(Element x, long long k) const {
  const auto ord = static_cast<long long>(element_order(x));
  k %= ord;
  if (k < 0) k += ord;
  Element result = identity;
  for (long long i = 0; i < k; ++i) result = mul(result, x);
  return result;
}

std::string FiniteGroup::label(Element x) const {
  return has_labels() ? impl_->labels[x] : std::to_string(x);
}

// Subgroups ------------------------------------------------------------------

bool lattice_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return lexicographic_less(a.members(), b.members());
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(FiniteGroup::identity);
  return Subgroup(g, std::move(s));
}

Subgroup whole_group(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) s.insert(x);
  return Subgroup(g, std::move(s));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) { return Subgroup(a.parent(), a.members() & b.members()); }

std::size_t product_size(const Subgroup& a, const Subgroup& b) {
  return a.order() * b.order() / a.members().intersection_size(b.members());
}

Subgroup make_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  ElementSet s(g.order());
  for (auto x : elements) {
    if (x >= g.order()) throw Error(ErrorKind::NotASubgroup, "element " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  if (!s.contains(FiniteGroup::identity)) throw Error(ErrorKind::NotASubgroup, "identity missing");
  const auto members = s.elements();
  for (auto x : members)
    for (auto y : members)
      if (!s.contains(g.mul(x, y)))
        throw Error(ErrorKind::NotASubgroup,
                    "not closed: " + std::to_string(x) + "*" + std::to_string(y) + " is missing");
  return Subgroup(g, std::move(s));
}

namespace {

Subgroup closure_from(const FiniteGroup& g, std::vector<Element> gens) {
  ElementSet s(g.order());
  s.insert(FiniteGroup::identity);
  std::vector<Element> list{FiniteGroup::identity};
  std::erase(gens, FiniteGroup::identity);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto x : gens) {
      const auto y = g.mul(list[i], x);
      if (!s.contains(y)) {
        s.insert(y);
        list.push_back(y);
      }
    }
  return Subgroup(g, std::move(s));
}

}  // namespace

std::vector<Element> subgroup_generators(const Subgroup& h);

namespace {

/// Smallest subgroup containing `seeds` and invariant under conjugation by `actors`.
Subgroup normal_closure(const FiniteGroup& g, std::vector<Element> seeds, std::span<const Element> actors) {
  auto current = closure_from(g, seeds);
  for (;;) {
    bool grew = false;
    for (auto c : subgroup_generators(current)) {
      for (auto a : actors) {
        const auto y = g.conjugate(c, a);
        if (!current.contains(y)) {
          seeds.push_back(y);
          grew = true;
        }
      }
    }
    if (!grew) return current;
    current = closure_from(g, seeds);
  }
}

}  // namespace

std::vector<Element> subgroup_generators(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Element> gens;
  ElementSet span(g.order());
  span.insert(FiniteGroup::identity);
  h.members().for_each([&](Element x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    span = closure_from(g, gens).members();
  });
  return gens;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Element> seeds) {
  for (auto x : seeds)
    if (x >= g.order()) throw Error(ErrorKind::NotASubgroup, "seed " + std::to_string(x) + " out of range");
  return closure_from(g, std::vector<Element>(seeds.begin(), seeds.end()));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, Element x) {
  ElementSet s(g.order());
  Element y = FiniteGroup::identity;
  do {
    s.insert(y);
    y = g.mul(y, x);
  } while (y != FiniteGroup::identity);
  return Subgroup(g, std::move(s));
}

Subgroup join(const Subgroup& h, std::span<const Element> extra) {
  std::vector<Element> gens;
  for (auto x : extra)
    if (!h.contains(x)) gens.push_back(x);
  if (gens.empty()) return h;
  auto base = subgroup_generators(h);
  base.insert(base.end(), gens.begin(), gens.end());
  return closure_from(h.parent(), std::move(base));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  const auto gens = subgroup_generators(b);
  return join(a, gens);
}

Subgroup center(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto y : g.generators())
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) s.insert(x);
  }
  return Subgroup(g, std::move(s));
}

Subgroup derived_subgroup(const FiniteGroup& g) { return derived_subgroup(whole_group(g)); }

Subgroup derived_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  const auto gens = subgroup_generators(h);
  std::vector<Element> seeds;
  for (auto x : gens)
    for (auto y : gens) seeds.push_back(g.commutator(x, y));
  return normal_closure(g, std::move(seeds), gens);
}

bool is_invariant_under(const Subgroup& h, std::span<const Element> actors) {
  const auto& g = h.parent();
  const auto members = h.elements();
  for (auto a : actors)
    for (auto x : members)
      if (!h.contains(g.conjugate(x, a))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) { return is_invariant_under(h, g.generators()); }

bool is_abelian(const FiniteGroup& g) {
  const auto gens = g.generators();
  for (auto x : gens)
    for (auto y : gens)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const auto& g = h.parent();
  const auto gens = subgroup_generators(h);
  for (auto x : gens)
    for (auto y : gens)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::size_t exponent(const FiniteGroup& g) { return exponent(whole_group(g)); }

std::size_t exponent(const Subgroup& h) {
  std::size_t e = 1;
  h.members().for_each([&](Element x) { e = std::lcm(e, h.parent().element_order(x)); });
  return e;
}

std::size_t element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_squarefree(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return n > 0;
}

// Homomorphisms and actions ---------------------------------------------------

Homomorphism::Homomorphism(FiniteGroup source, FiniteGroup target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order()) throw Error(ErrorKind::NotHomomorphism, "map length differs from source order");
  for (auto y : map_)
    if (y >= target_.order()) throw Error(ErrorKind::NotHomomorphism, "image out of range");
  if (map_[0] != FiniteGroup::identity) throw Error(ErrorKind::NotHomomorphism, "identity not preserved");
  for (Element x = 0; x < source_.order(); ++x)
    for (Element y = 0; y < source_.order(); ++y)
      if (map_[source_.mul(x, y)] != target_.mul(map_[x], map_[y]))
        throw Error(ErrorKind::NotHomomorphism,
                    "fails on pair (" + std::to_string(x) + ", " + std::to_string(y) + ")");
}

bool Homomorphism::is_surjective() const {
  std::vector<char> hit(target_.order(), 0);
  for (auto y : map_) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Homomorphism::is_injective() const { return kernel().is_trivial(); }

Subgroup Homomorphism::kernel() const { return preimage(trivial_subgroup(target_)); }

Subgroup Homomorphism::image(const Subgroup& h) const {
  ElementSet s(target_.order());
  h.members().for_each([&](Element x) { s.insert(map_[x]); });
  return Subgroup(target_, std::move(s));
}

Subgroup Homomorphism::preimage(const Subgroup& k) const {
  ElementSet s(source_.order());
  for (Element x = 0; x < source_.order(); ++x)
    if (k.contains(map_[x])) s.insert(x);
  return Subgroup(source_, std::move(s));
}

GAction::GAction(FiniteGroup actor, FiniteGroup space, std::vector<Element> table)
    : actor_(std::move(actor)), space_(std::move(space)), table_(std::move(table)) {
  const auto nb = actor_.order(), na = space_.order();
  if (table_.size() != nb * na) throw Error(ErrorKind::InvalidAction, "action table must be |B| x |A|");
  for (auto a : table_)
    if (a >= na) throw Error(ErrorKind::InvalidAction, "action entry out of range");
  for (Element a = 0; a < na; ++a)
    if (apply(0, a) != a) throw Error(ErrorKind::InvalidAction, "identity of the actor does not act trivially");
  std::vector<char> seen(na);
  for (Element b = 0; b < nb; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < na; ++a)
      if (seen[apply(b, a)]++) throw Error(ErrorKind::InvalidAction, "row " + std::to_string(b) + " is not bijective");
    for (Element x = 0; x < na; ++x)
      for (Element y = 0; y < na; ++y)
        if (apply(b, space_.mul(x, y)) != space_.mul(apply(b, x), apply(b, y)))
          throw Error(ErrorKind::InvalidAction, "row " + std::to_string(b) + " is not a homomorphism");
  }
  for (Element b1 = 0; b1 < nb; ++b1)
    for (Element b2 = 0; b2 < nb; ++b2)
      for (Element a = 0; a < na; ++a)
        if (apply(actor_.mul(b1, b2), a) != apply(b1, apply(b2, a)))
          throw Error(ErrorKind::InvalidAction,
                      "rows do not compose: act(" + std::to_string(b1) + "*" + std::to_string(b2) + ")");
}

GAction GAction::trivial(FiniteGroup actor, FiniteGroup space) {
  std::vector<Element> table(actor.order() * space.order());
  for (std::size_t b = 0; b < actor.order(); ++b)
    for (std::size_t a = 0; a < space.order(); ++a) table[b * space.order() + a] = static_cast<Element>(a);
  return GAction(std::move(actor), std::move(space), std::move(table));
}

// Construction ---------------------------------------------------------------

FiniteGroup group_from_table(const std::vector<std::vector<long long>>& table, const Limits& limits) {
  const auto n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::BadTable, "row " + std::to_string(i) + " has wrong length");
    for (auto v : table[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw Error(ErrorKind::BadTable, "entry " + std::to_string(v) + " in row " + std::to_string(i) + " out of range");
      flat.push_back(static_cast<Element>(v));
    }
  }
  return FiniteGroup::from_table(n, std::move(flat), {}, limits);
}

FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    const Limits& limits) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& p = generators[i];
    std::vector<char> hit(degree, 0);
    bool ok = p.size() == degree;
    for (std::size_t j = 0; ok && j < p.size(); ++j) {
      ok = p[j] < degree && !hit[p[j]];
      if (ok) hit[p[j]] = 1;
    }
    if (!ok) throw Error(ErrorKind::NotPermutation, "generator " + std::to_string(i) + " is not a bijection");
  }
  auto compose = [degree](const Permutation& x, const Permutation& y) {
    Permutation out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = y[x[i]];
    return out;
  };

  Permutation id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : generators) {
      auto y = compose(elements[i], g);
      if (index.contains(y)) continue;
      if (elements.size() >= limits.max_order)
        throw Error(ErrorKind::OrderCapExceeded,
                    "permutation closure exceeds cap " + std::to_string(limits.max_order));
      index.emplace(y, static_cast<Element>(elements.size()));
      elements.push_back(std::move(y));
    }

  const auto n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = index.at(compose(elements[x], elements[y]));
  std::vector<std::string> labels;
  for (const auto& p : elements) labels.push_back(cycle_notation(p));
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), limits);
}

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "cyclic group of order 0");
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Element>((x + y) % n);
  return FiniteGroup::from_table(n, std::move(table), {}, uncapped());
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const auto ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Element> table(n * n);
  for (Element g1 = 0; g1 < ng; ++g1)
    for (Element h1 = 0; h1 < nh; ++h1)
      for (Element g2 = 0; g2 < ng; ++g2)
        for (Element h2 = 0; h2 < nh; ++h2)
          table[(std::size_t{g1} * nh + h1) * n + std::size_t{g2} * nh + h2] =
              static_cast<Element>(std::size_t{g.mul(g1, g2)} * nh + h.mul(h1, h2));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < ng; ++x)
    for (Element y = 0; y < nh; ++y) labels.push_back("(" + g.label(x) + "," + h.label(y) + ")");
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), uncapped());
}

FiniteGroup semidirect_product(const GAction& action) {
  const auto& b = action.actor();
  const auto& a = action.space();
  const auto nb = b.order(), na = a.order(), n = nb * na;
  std::vector<Element> table(n * n);
  for (Element b1 = 0; b1 < nb; ++b1)
    for (Element a1 = 0; a1 < na; ++a1)
      for (Element b2 = 0; b2 < nb; ++b2) {
        const auto twisted = action.apply(b.inv(b2), a1);
        for (Element a2 = 0; a2 < na; ++a2)
          table[(std::size_t{b1} * na + a1) * n + std::size_t{b2} * na + a2] =
              static_cast<Element>(std::size_t{b.mul(b1, b2)} * na + a.mul(twisted, a2));
      }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element x = 0; x < nb; ++x)
    for (Element y = 0; y < na; ++y) labels.push_back("(" + b.label(x) + ";" + a.label(y) + ")");
  return FiniteGroup::from_table(n, std::move(table), std::move(labels), uncapped());
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  const auto members = n.elements();
  constexpr Element unassigned = std::numeric_limits<Element>::max();
  std::vector<Element> coset(g.order(), unassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (coset[x] != unassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto m : members) coset[g.mul(x, m)] = id;
  }
  const auto q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back("[" + g.label(r) + "]");
  auto group = FiniteGroup::from_table(q, std::move(table), std::move(labels), uncapped());
  Homomorphism proj(Homomorphism::unchecked_t{}, g, group, std::move(coset));
  return {std::move(group), std::move(proj)};
}

InducedGroup subgroup_as_group(const Subgroup& h) {
  const auto& g = h.parent();
  const auto members = h.elements();
  const auto k = members.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[members[i]] = static_cast<Element>(i);
  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = local[g.mul(members[i], members[j])];
  std::vector<std::string> labels;
  for (auto x : members) labels.push_back(g.label(x));
  auto group = FiniteGroup::from_table(k, std::move(table), std::move(labels), uncapped());
  Homomorphism emb(Homomorphism::unchecked_t{}, group, g, members);
  return {std::move(group), std::move(emb)};
}

}  // namespace permutable
