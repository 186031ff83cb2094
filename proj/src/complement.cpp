#include "permutable/complement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "permutable/lattice.hpp"

namespace permutable {

namespace {

using SubgroupSet = std::unordered_set<ElementSet, ElementSetHash>;

bool meets_trivially(const Subgroup& a, const Subgroup& b) { return a.members().intersection_size(b.members()) == 1; }

/// <x> n H = 1, tested on the prime-order powers of x.
bool cyclic_avoids(const FiniteGroup& g, Element x, const Subgroup& h) {
  const auto ord = g.element_order(x);
  for (auto r : prime_divisors(ord))
    if (h.contains(g.power(x, static_cast<long long>(ord / r)))) return false;
  return true;
}

Element smallest_nontrivial(const Subgroup& h) {
  for (auto x : h.elements())
    if (x != FiniteGroup::identity) return x;
  return FiniteGroup::identity;
}

void require_abelian_normal(const FiniteGroup& g, const Subgroup& a) {
  if (!is_abelian(a)) throw Error(ErrorKind::NotAbelianNormal, "subgroup is not abelian");
  if (!is_normal(g, a)) throw Error(ErrorKind::NotAbelianNormal, "subgroup is not normal");
}

struct SplitStep {
  bool ok = false;
  std::vector<Subgroup> lines;
  std::string failed_stage;
  std::string diagnosis;
};

/// Splits the abelian subgroup `a` into subgroups of prime order that are
/// invariant under `actors`, prime by prime, selecting lines greedily in
/// lattice order.
SplitStep split_into_lines(const Subgroup& a, std::span<const Element> actors) {
  const auto& g = a.parent();
  SplitStep out;
  for (auto p : prime_divisors(a.order())) {
    ElementSet sylow(g.order());
    bool elementary = true;
    a.members().for_each([&](Element x) {
      const auto ord = g.element_order(x);
      std::size_t m = ord;
      while (m % p == 0) m /= p;
      if (m != 1) return;
      sylow.insert(x);
      if (ord > p) elementary = false;
    });
    if (!elementary) {
      out.failed_stage = "sylow_not_elementary";
      out.diagnosis = "Sylow " + std::to_string(p) + "-subgroup has exponent greater than " + std::to_string(p);
      return out;
    }
    std::vector<Subgroup> candidates;
    SubgroupSet seen;
    sylow.for_each([&](Element x) {
      if (x == FiniteGroup::identity) return;
      auto line = cyclic_subgroup(g, x);
      if (!seen.insert(line.members()).second) return;
      if (is_invariant_under(line, actors)) candidates.push_back(std::move(line));
    });
    std::sort(candidates.begin(), candidates.end(), lattice_less);
    auto span = trivial_subgroup(g);
    for (auto& line : candidates) {
      const auto x = smallest_nontrivial(line);
      if (span.contains(x)) continue;
      const Element gen[] = {x};
      span = join(span, gen);
      out.lines.push_back(std::move(line));
    }
    if (span.order() != sylow.size()) {
      out.failed_stage = "lines_do_not_span";
      out.diagnosis = "invariant lines of order " + std::to_string(p) + " span " + std::to_string(span.order()) +
                      " of " + std::to_string(sylow.size()) + " elements";
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace

std::vector<Subgroup> permutable_complements(const std::vector<Subgroup>& lattice, const Subgroup& h) {
  const auto n = h.parent().order();
  std::vector<Subgroup> out;
  if (n % h.order()) return out;
  const auto target = n / h.order();
  for (const auto& k : lattice)
    if (k.order() == target && meets_trivially(h, k)) out.push_back(k);
  return out;
}

std::vector<Subgroup> permutable_complements(const FiniteGroup& g, const Subgroup& h, const Limits& limits) {
  return permutable_complements(all_subgroups(g, limits), h);
}

std::optional<Subgroup> find_complement_within(const Subgroup& h, const Subgroup& within, const Limits& limits) {
  const auto& g = h.parent();
  if (g.order() % h.order()) return std::nullopt;
  const auto target = g.order() / h.order();
  if (target == 1) return trivial_subgroup(g);
  if (within.order() < target) return std::nullopt;
  if (within.order() == target) {
    if (meets_trivially(h, within)) return within;
    return std::nullopt;
  }

  struct Candidate {
    std::size_t order;
    Element rep;
  };
  std::vector<Candidate> candidates;
  SubgroupSet seen_cyclic;
  within.members().for_each([&](Element x) {
    if (x == FiniteGroup::identity) return;
    const auto ord = g.element_order(x);
    if (target % ord || !cyclic_avoids(g, x, h)) return;
    if (!seen_cyclic.insert(cyclic_subgroup(g, x).members()).second) return;
    candidates.push_back({ord, x});
  });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.order < b.order; });

  SubgroupSet visited;
  std::function<std::optional<Subgroup>(const Subgroup&, std::vector<Element>&)> search =
      [&](const Subgroup& current, std::vector<Element>& gens) -> std::optional<Subgroup> {
    for (const auto& c : candidates) {
      if (current.contains(c.rep)) continue;
      gens.push_back(c.rep);
      auto next = subgroup_closure(g, gens);
      const bool usable = target % next.order() == 0 && meets_trivially(next, h);
      if (usable && visited.insert(next.members()).second) {
        if (visited.size() > limits.max_subgroups)
          throw Error(ErrorKind::SubgroupLimitExceeded,
                      "complement search visited more than " + std::to_string(limits.max_subgroups) + " subgroups");
        if (next.order() == target) return next;
        if (auto found = search(next, gens)) return found;
      }
      gens.pop_back();
    }
    return std::nullopt;
  };
  std::vector<Element> gens;
  return search(trivial_subgroup(g), gens);
}

CVerdict is_c_group(const FiniteGroup& g, const Limits& limits) {
  const auto lattice = all_subgroups(g, limits);
  std::map<std::size_t, std::vector<const Subgroup*>> by_order;
  for (const auto& k : lattice) by_order[k.order()].push_back(&k);
  CVerdict verdict;
  verdict.subgroups = lattice.size();
  for (const auto& h : lattice) {
    const auto it = by_order.find(g.order() / h.order());
    const bool has_complement =
        it != by_order.end() &&
        std::any_of(it->second.begin(), it->second.end(), [&](const Subgroup* k) { return meets_trivially(h, *k); });
    if (!has_complement) {
      verdict.c_group = false;
      verdict.witness = h;
      return verdict;
    }
  }
  return verdict;
}

bool is_c_group_structural(const FiniteGroup& g, const Limits& limits) {
  return cernikova_decompose(g, limits).decomposition.has_value();
}

Subgroup refine_supplement(const FiniteGroup& g, const Subgroup& h, const Subgroup& s, const Limits& limits) {
  if (product_size(h, s) != g.order()) throw Error(ErrorKind::NotASupplement, "HS is not the whole group");
  if (s.order() <= limits.lattice_max_order) {
    const auto target = g.order() / h.order();
    for (const auto& k : subgroups_within(s, limits))
      if (k.order() == target && meets_trivially(h, k)) return k;
  } else if (auto k = find_complement_within(h, s, limits)) {
    return *k;
  }
  throw Error(ErrorKind::NoComplementFound, "the supplement contains no permutable complement");
}

std::optional<Subgroup> lift_through_kernel(const Subgroup& h, const Subgroup& n, const Subgroup& s,
                                            const Limits& limits) {
  const auto& g = h.parent();
  if (g.order() % h.order()) return std::nullopt;
  const auto target = g.order() / h.order();
  // KN = S forces |K n N| = |K||N|/|S|; K n N meets H trivially.
  if ((target * n.order()) % s.order()) return std::nullopt;
  const auto c_order = target * n.order() / s.order();
  if (n.order() % c_order) return std::nullopt;
  if (n.is_trivial()) {
    if (meets_trivially(h, s)) return s;
    return std::nullopt;
  }
  if (n.order() > limits.lattice_max_order) {
    auto k = find_complement_within(h, s, limits);
    if (k && product_size(*k, n) == s.order()) return k;
    return std::nullopt;
  }

  // Representatives of S modulo N.
  std::vector<Element> tops;
  auto span = n;
  for (auto x : s.elements()) {
    if (span.contains(x)) continue;
    tops.push_back(x);
    const Element gen[] = {x};
    span = join(span, gen);
  }

  const auto n_elements = n.elements();
  for (const auto& c : subgroups_within(n, limits)) {
    if (c.order() != c_order || !meets_trivially(c, h)) continue;
    // Lifts t*y and t*y*c generate the same group together with C.
    std::vector<Element> offsets;
    ElementSet covered(g.order());
    const auto c_elements = c.elements();
    for (auto y : n_elements) {
      if (covered.contains(y)) continue;
      offsets.push_back(y);
      for (auto z : c_elements) covered.insert(g.mul(y, z));
    }

    std::vector<SubgroupSet> visited(tops.size() + 1);
    std::function<std::optional<Subgroup>(std::size_t, std::vector<Element>&)> extend =
        [&](std::size_t j, std::vector<Element>& gens) -> std::optional<Subgroup> {
      if (j == tops.size()) {
        auto k = subgroup_closure(g, gens);
        if (k.order() == target && meets_trivially(k, h)) return k;
        return std::nullopt;
      }
      for (auto y : offsets) {
        gens.push_back(g.mul(tops[j], y));
        auto t = subgroup_closure(g, gens);
        const bool ok = t.order() <= target && target % t.order() == 0 && meets_trivially(t, h) &&
                        t.members().intersection_size(n.members()) == c.order();
        if (ok && visited[j].insert(t.members()).second) {
          if (auto found = extend(j + 1, gens)) return found;
        }
        gens.pop_back();
      }
      return std::nullopt;
    };
    auto gens = subgroup_generators(c);
    if (auto found = extend(0, gens)) return found;
  }
  return std::nullopt;
}

Subgroup lift_complement(const FiniteGroup& g, const Subgroup& h, const Subgroup& n, const Subgroup& s,
                         const Limits& limits) {
  if (!is_normal(g, n)) throw Error(ErrorKind::HypothesisViolated, "N is not normal in G");
  if (!n.is_subgroup_of(s)) throw Error(ErrorKind::HypothesisViolated, "N is not contained in S");
  if (!meets_trivially(h, n)) throw Error(ErrorKind::HypothesisViolated, "H n N is not trivial");
  const auto hn = join(h, n);
  if (s.members().intersection_size(hn.members()) != n.order() || s.order() * hn.order() != g.order() * n.order())
    throw Error(ErrorKind::HypothesisViolated, "S/N is not a permutable complement of HN/N in G/N");
  if (n.is_trivial()) return s;
  if (auto k = lift_through_kernel(h, n, s, limits)) return *k;
  throw Error(ErrorKind::NoComplementFound, "no permutable complement K of H with KN = S");
}

Subgroup radical(const FiniteGroup& g, const Subgroup& a, const Limits& limits) {
  require_abelian_normal(g, a);
  if (a.is_trivial()) return a;
  std::vector<Subgroup> invariant;
  for (auto& b : subgroups_within(a, limits))
    if (b.order() < a.order() && is_normal(g, b)) invariant.push_back(std::move(b));
  auto result = a;
  for (const auto& m : invariant) {
    const bool maximal = std::none_of(invariant.begin(), invariant.end(), [&](const Subgroup& other) {
      return other.order() > m.order() && m.is_subgroup_of(other);
    });
    if (maximal) result = intersection(result, m);
  }
  return result;
}

SplitResult split_abelian_normal(const FiniteGroup& g, const Subgroup& a, const Limits& limits) {
  require_abelian_normal(g, a);
  auto step = split_into_lines(a, g.generators());
  SplitResult out;
  out.ok = step.ok;
  out.lines = std::move(step.lines);
  out.failed_stage = std::move(step.failed_stage);
  out.diagnosis = std::move(step.diagnosis);
  if (!out.ok) {
    out.lines.clear();
    if (a.order() <= limits.lattice_max_order) {
      out.radical = radical(g, a, limits);
      if (!out.radical->is_trivial())
        out.diagnosis += "; radical is nontrivial (order " + std::to_string(out.radical->order()) + ")";
      else
        out.diagnosis += "; radical is trivial, so some composition factor has non-prime order";
    }
  }
  return out;
}

CernikovaResult cernikova_decompose(const FiniteGroup& g, const Limits& limits) {
  CernikovaResult out;
  auto fail = [&](std::string name, std::string detail) {
    out.stages.push_back({name, false, std::move(detail)});
    out.failed_stage = std::move(name);
    return out;
  };

  auto a = derived_subgroup(g);
  if (!is_abelian(a)) return fail("derived_abelian", "derived subgroup of order " + std::to_string(a.order()) + " is not abelian");
  out.stages.push_back({"derived_abelian", true, "derived subgroup has order " + std::to_string(a.order())});

  auto split = split_abelian_normal(g, a, limits);
  if (!split.ok) return fail("split_derived", split.failed_stage + ": " + split.diagnosis);
  out.stages.push_back({"split_derived", true, std::to_string(split.lines.size()) + " normal lines of prime order"});

  std::optional<Subgroup> b;
  if (g.order() <= limits.lattice_max_order) {
    auto complements = permutable_complements(g, a, limits);
    if (!complements.empty()) b = std::move(complements.front());
  } else {
    b = find_complement_within(a, whole_group(g), limits);
  }
  if (!b) return fail("complement_of_derived", "the derived subgroup has no permutable complement");
  out.stages.push_back({"complement_of_derived", true, "complement of order " + std::to_string(b->order())});

  if (!is_abelian(*b)) return fail("decompose_complement", "complement is not abelian");
  auto b_split = split_into_lines(*b, {});
  if (!b_split.ok) return fail("decompose_complement", b_split.failed_stage + ": " + b_split.diagnosis);
  out.stages.push_back({"decompose_complement", true, std::to_string(b_split.lines.size()) + " cyclic factors of prime order"});

  CernikovaDecomposition d{{}, {}, a, *b};
  for (const auto& line : split.lines) d.a_generators.push_back({smallest_nontrivial(line), line.order()});
  for (const auto& line : b_split.lines) d.b_generators.push_back({smallest_nontrivial(line), line.order()});
  out.decomposition = std::move(d);
  return out;
}

std::string check_decomposition(const FiniteGroup& g, const CernikovaDecomposition& d) {
  auto check_factors = [&](const std::vector<PrimeGenerator>& gens, const Subgroup& whole, bool normal_in_g,
                           const char* name) -> std::string {
    std::size_t product = 1;
    std::vector<Element> elems;
    for (const auto& pg : gens) {
      if (!is_prime(pg.order) || g.element_order(pg.element) != pg.order)
        return std::string(name) + " generator " + std::to_string(pg.element) + " is not of the stated prime order";
      if (normal_in_g && !is_normal(g, cyclic_subgroup(g, pg.element)))
        return std::string(name) + " generator " + std::to_string(pg.element) + " does not span a normal subgroup";
      product *= pg.order;
      elems.push_back(pg.element);
    }
    if (!(subgroup_closure(g, elems) == whole)) return std::string(name) + " generators do not generate the subgroup";
    if (product != whole.order()) return std::string(name) + " is not the direct product of its factors";
    if (!is_abelian(whole)) return std::string(name) + " is not abelian";
    return {};
  };
  if (auto err = check_factors(d.a_generators, d.a_subgroup, true, "A"); !err.empty()) return err;
  if (auto err = check_factors(d.b_generators, d.b_subgroup, false, "B"); !err.empty()) return err;
  if (!is_normal(g, d.a_subgroup)) return "A is not normal";
  if (!meets_trivially(d.a_subgroup, d.b_subgroup)) return "A n B is not trivial";
  if (d.a_subgroup.order() * d.b_subgroup.order() != g.order()) return "AB is not the whole group";
  return {};
}

RebuiltGroup rebuild_from_decomposition(const FiniteGroup& g, const CernikovaDecomposition& d) {
  auto product_of = [](const std::vector<PrimeGenerator>& gens) {
    auto out = cyclic(1);
    for (const auto& pg : gens) out = direct_product(out, cyclic(pg.order));
    return out;
  };
  // Mixed radix, first factor most significant.
  auto decode = [](std::size_t index, const std::vector<PrimeGenerator>& gens) {
    std::vector<std::size_t> exps(gens.size());
    for (std::size_t i = gens.size(); i-- > 0;) {
      exps[i] = index % gens[i].order;
      index /= gens[i].order;
    }
    return exps;
  };
  auto encode = [](const std::vector<std::size_t>& exps, const std::vector<PrimeGenerator>& gens) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) index = index * gens[i].order + exps[i];
    return static_cast<Element>(index);
  };

  const auto a_ext = product_of(d.a_generators);
  const auto b_ext = product_of(d.b_generators);
  RebuiltGroup out{a_ext, {}, false, {}};

  // b_j a_i b_j^-1 = a_i^theta[j][i]
  std::vector<std::vector<std::size_t>> theta(d.b_generators.size(), std::vector<std::size_t>(d.a_generators.size(), 0));
  for (std::size_t j = 0; j < d.b_generators.size(); ++j)
    for (std::size_t i = 0; i < d.a_generators.size(); ++i) {
      const auto a = d.a_generators[i].element;
      const auto image = g.conjugate(a, g.inv(d.b_generators[j].element));
      for (std::size_t t = 1; t < d.a_generators[i].order && !theta[j][i]; ++t)
        if (g.power(a, static_cast<long long>(t)) == image) theta[j][i] = t;
      if (!theta[j][i]) {
        out.failure = "conjugation by a B generator leaves the line of an A generator";
        return out;
      }
    }

  const auto na = a_ext.order(), nb = b_ext.order();
  std::vector<Element> action(nb * na);
  for (std::size_t b = 0; b < nb; ++b) {
    const auto f = decode(b, d.b_generators);
    std::vector<std::size_t> scale(d.a_generators.size(), 1);
    for (std::size_t i = 0; i < scale.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t r = 0; r < f[j]; ++r) scale[i] = scale[i] * theta[j][i] % d.a_generators[i].order;
    for (std::size_t a = 0; a < na; ++a) {
      auto e = decode(a, d.a_generators);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e[i] * scale[i] % d.a_generators[i].order;
      action[b * na + a] = encode(e, d.a_generators);
    }
  }

  try {
    out.group = semidirect_product(GAction(b_ext, a_ext, std::move(action)));
  } catch (const Error& err) {
    out.failure = err.what();
    return out;
  }

  const auto n = out.group.order();
  out.to_parent.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto f = decode(x / na, d.b_generators);
    const auto e = decode(x % na, d.a_generators);
    Element y = FiniteGroup::identity;
    for (std::size_t j = 0; j < f.size(); ++j)
      y = g.mul(y, g.power(d.b_generators[j].element, static_cast<long long>(f[j])));
    for (std::size_t i = 0; i < e.size(); ++i)
      y = g.mul(y, g.power(d.a_generators[i].element, static_cast<long long>(e[i])));
    out.to_parent[x] = y;
  }
  if (n != g.order()) {
    out.failure = "rebuilt order differs from |G|";
    return out;
  }
  std::vector<char> hit(n, 0);
  for (auto y : out.to_parent) {
    if (hit[y]++) {
      out.failure = "generator map is not injective";
      return out;
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (out.to_parent[out.group.mul(x, y)] != g.mul(out.to_parent[x], out.to_parent[y])) {
        out.failure = "generator map does not preserve the product of " + std::to_string(x) + " and " + std::to_string(y);
        return out;
      }
  out.is_isomorphism = true;
  return out;
}

SemidirectCertificate semidirect_c_criterion(const FiniteGroup& g, const Subgroup& h, const Subgroup& n,
                                             const Limits& limits) {
  if (!is_normal(g, n)) throw Error(ErrorKind::NotSemidirect, "N is not normal");
  if (!meets_trivially(h, n)) throw Error(ErrorKind::NotSemidirect, "H n N is not trivial");
  if (h.order() * n.order() != g.order()) throw Error(ErrorKind::NotSemidirect, "HN is not the whole group");

  SemidirectCertificate cert;
  cert.h_is_c_group = is_c_group(subgroup_as_group(h).group, limits).c_group;
  const auto lattice = subgroups_within(n, limits);
  bool all_found = true;
  for (const auto& e : lattice) {
    std::optional<Subgroup> found;
    for (const auto& c : lattice) {
      if (c.order() * e.order() == n.order() && meets_trivially(c, e) && is_normal(g, c)) {
        found = c;
        break;
      }
    }
    all_found = all_found && found.has_value();
    cert.complements.emplace_back(e, std::move(found));
  }
  cert.holds = cert.h_is_c_group && all_found;
  if (g.order() <= limits.lattice_max_order) cert.g_is_c_group = is_c_group(g, limits).c_group;
  return cert;
}

ThetaPartition theta_partition(const FiniteGroup& g, const Subgroup& k, const Subgroup& p,
                               const std::vector<Subgroup>& lines) {
  const auto primes = prime_divisors(p.order());
  if (primes.size() != 1 || exponent(p) != primes.front() || !is_abelian(p))
    throw Error(ErrorKind::HypothesisViolated, "P is not a nontrivial elementary abelian p-group");
  ThetaPartition out{0, {}, {}, {}, {}, {}, trivial_subgroup(g)};
  out.prime = primes.front();
  out.k_elements = k.elements();
  out.lines = lines;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.order() != out.prime || !line.is_subgroup_of(p))
      throw Error(ErrorKind::HypothesisViolated, "line " + std::to_string(i) + " is not an order-p subgroup of P");
    const auto x = smallest_nontrivial(line);
    out.line_generators.push_back(x);
    std::vector<std::size_t> character;
    for (auto kk : out.k_elements) {
      const auto y = g.conjugate(x, kk);
      std::size_t t = 0;
      for (std::size_t s = 1; s < out.prime && !t; ++s)
        if (g.power(x, static_cast<long long>(s)) == y) t = s;
      if (!t) throw Error(ErrorKind::LineNotInvariant, "line " + std::to_string(i) + " is moved by element " + std::to_string(kk));
      character.push_back(t);
    }
    out.characters.push_back(std::move(character));
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const ThetaClass& c) { return c.scalars == out.characters[i]; });
    if (it == out.classes.end()) {
      out.classes.push_back({{i}, out.characters[i], lines[i]});
    } else {
      it->lines.push_back(i);
      it->product = join(it->product, lines[i]);
      out.collapsed = join(out.collapsed, lines[i]);
    }
  }
  return out;
}

bool is_sc_group(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.sc_max_order)
    throw Error(ErrorKind::SubgroupLimitExceeded,
                "order " + std::to_string(g.order()) + " exceeds SC cap " + std::to_string(limits.sc_max_order));
  const auto lattice = all_subgroups(g, limits);
  for (const auto& h : lattice) {
    std::vector<const Subgroup*> above;
    for (const auto& j : lattice)
      if (h.is_subgroup_of(j)) above.push_back(&j);
    const bool has_witness = std::any_of(lattice.begin(), lattice.end(), [&](const Subgroup& k) {
      return std::all_of(above.begin(), above.end(), [&](const Subgroup* j) {
        const auto l = intersection(*j, k);
        return meets_trivially(h, l) && join(h, l).order() == j->order();
      });
    });
    if (!has_witness) return false;
  }
  return true;
}

}  // namespace permutable
