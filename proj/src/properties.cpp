#include "permutable/properties.hpp"

#include <algorithm>

#include "permutable/complement.hpp"
#include "permutable/lattice.hpp"

namespace permutable {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skip: return "skip";
  }
  return "skip";
}

namespace {

PropertyResult pass(std::string name) { return {std::move(name), Outcome::Pass, {}}; }
PropertyResult skip(std::string name, std::string why) { return {std::move(name), Outcome::Skip, std::move(why)}; }
PropertyResult fail(std::string name, std::string why) { return {std::move(name), Outcome::Fail, std::move(why)}; }

std::string describe(const Subgroup& h) {
  std::string out = "order " + std::to_string(h.order()) + " {";
  bool first = true;
  for (auto x : h.elements()) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

Subgroup conjugate_subgroup(const Subgroup& h, Element g) {
  const auto& parent = h.parent();
  ElementSet out(parent.order());
  h.members().for_each([&](Element x) { out.insert(parent.conjugate(x, g)); });
  return Subgroup(parent, std::move(out));
}

GroupFacts gather_facts(const FiniteGroup& g, const Limits& limits) {
  GroupFacts f{g, all_subgroups(g, limits), false};
  f.c_group = true;
  for (const auto& h : f.lattice)
    if (permutable_complements(f.lattice, h).empty()) {
      f.c_group = false;
      break;
    }
  return f;
}

PropertyResult check_oracle_equivalence(const GroupFacts& f, const Limits& limits) {
  const char* name = "oracle_equivalence";
  const auto r = cernikova_decompose(f.group, limits);
  const bool structural = r.decomposition.has_value();
  if (structural != f.c_group)
    return fail(name, std::string("lattice says ") + (f.c_group ? "C-group" : "not a C-group") +
                          ", decomposition " + (structural ? "succeeded" : "failed at " + r.failed_stage));
  return pass(name);
}

PropertyResult check_subgroup_heredity(const GroupFacts& f, const Limits& limits) {
  const char* name = "subgroup_heredity";
  if (!f.c_group) return skip(name, "not a C-group");
  for (const auto& h : f.lattice) {
    if (h.is_whole()) continue;
    if (!is_c_group(subgroup_as_group(h).group, limits).c_group) return fail(name, "subgroup " + describe(h));
  }
  return pass(name);
}

PropertyResult check_quotient_heredity(const GroupFacts& f, const Limits& limits) {
  const char* name = "quotient_heredity";
  if (!f.c_group) return skip(name, "not a C-group");
  for (const auto& n : normal_subgroups(f.group, f.lattice)) {
    if (n.is_trivial()) continue;
    if (!is_c_group(quotient(f.group, n).group, limits).c_group) return fail(name, "quotient by " + describe(n));
  }
  return pass(name);
}

PropertyResult check_supplements(const GroupFacts& f, const Limits& limits) {
  const char* name = "supplements_contain_complements";
  if (!f.c_group) return skip(name, "not a C-group");
  const auto n = f.group.order();
  for (const auto& h : f.lattice)
    for (const auto& s : f.lattice) {
      if (product_size(h, s) != n) continue;
      try {
        const auto k = refine_supplement(f.group, h, s, limits);
        if (!k.is_subgroup_of(s) || k.members().intersection_size(h.members()) != 1 || h.order() * k.order() != n)
          return fail(name, "refined complement is invalid for H " + describe(h));
      } catch (const Error& e) {
        return fail(name, "H " + describe(h) + ", S " + describe(s) + ": " + e.what());
      }
    }
  return pass(name);
}

PropertyResult check_metabelian(const GroupFacts& f) {
  const char* name = "metabelian";
  if (!f.c_group) return skip(name, "not a C-group");
  if (!is_abelian(derived_subgroup(f.group))) return fail(name, "derived subgroup is not abelian");
  return pass(name);
}

PropertyResult check_minimal_normals(const GroupFacts& f) {
  const char* name = "minimal_normals_prime";
  if (!f.c_group) return skip(name, "not a C-group");
  for (const auto& m : minimal_normal_subgroups(f.group, f.lattice))
    if (!is_prime(m.order())) return fail(name, "minimal normal subgroup " + describe(m));
  return pass(name);
}

PropertyResult check_squarefree_exponent(const GroupFacts& f) {
  const char* name = "squarefree_exponent";
  const bool squarefree = is_squarefree(exponent(f.group));
  if (f.c_group && !squarefree) return fail(name, "C-group with exponent " + std::to_string(exponent(f.group)));
  if (is_abelian(f.group) && squarefree && !f.c_group) return fail(name, "abelian, squarefree exponent, not a C-group");
  if (!f.c_group && !is_abelian(f.group)) return skip(name, "non-abelian and not a C-group");
  return pass(name);
}

PropertyResult check_radical_split(const GroupFacts& f, const Limits& limits) {
  const char* name = "radical_split";
  if (!f.c_group) return skip(name, "not a C-group");
  for (const auto& a : normal_subgroups(f.group, f.lattice)) {
    if (a.is_trivial() || !is_abelian(a)) continue;
    if (!radical(f.group, a, limits).is_trivial()) return fail(name, "non-trivial radical for " + describe(a));
    const auto split = split_abelian_normal(f.group, a, limits);
    if (!split.ok) return fail(name, "split failed at " + split.failed_stage + " for " + describe(a));
    std::size_t product = 1;
    for (const auto& line : split.lines) product *= line.order();
    if (product != a.order()) return fail(name, "line orders do not multiply to |A| for " + describe(a));
  }
  return pass(name);
}

PropertyResult check_round_trip(const GroupFacts& f, const Limits& limits) {
  const char* name = "round_trip";
  if (!f.c_group) return skip(name, "not a C-group");
  const auto r = cernikova_decompose(f.group, limits);
  if (!r.decomposition) return fail(name, "no decomposition (failed at " + r.failed_stage + ")");
  if (auto err = check_decomposition(f.group, *r.decomposition); !err.empty()) return fail(name, err);
  const auto rebuilt = rebuild_from_decomposition(f.group, *r.decomposition);
  if (!rebuilt.is_isomorphism) return fail(name, rebuilt.failure);
  return pass(name);
}

PropertyResult check_complement_conjugation(const GroupFacts& f) {
  const char* name = "complement_conjugation";
  auto sorted_complements = [&](const Subgroup& h) {
    auto out = permutable_complements(f.lattice, h);
    std::sort(out.begin(), out.end(), lattice_less);
    return out;
  };
  for (const auto& h : f.lattice) {
    const auto base = permutable_complements(f.lattice, h);
    for (auto g : f.group.generators()) {
      std::vector<Subgroup> moved;
      for (const auto& k : base) moved.push_back(conjugate_subgroup(k, g));
      std::sort(moved.begin(), moved.end(), lattice_less);
      if (moved != sorted_complements(conjugate_subgroup(h, g)))
        return fail(name, "H " + describe(h) + ", g = " + std::to_string(g));
    }
  }
  return pass(name);
}

PropertyResult check_sc_equivalence(const GroupFacts& f, const Limits& limits) {
  const char* name = "sc_equivalence";
  if (f.group.order() > limits.sc_max_order) return skip(name, "order above the SC cap");
  const bool sc = is_sc_group(f.group, limits);
  if (sc != f.c_group) return fail(name, std::string("SC verdict ") + (sc ? "true" : "false") + " differs from C verdict");
  return pass(name);
}

PropertyResult check_product_closure(const GroupFacts& a, const GroupFacts& b, const Limits& limits) {
  const char* name = "product_closure";
  const auto product = direct_product(a.group, b.group);
  if (product.order() > limits.lattice_max_order) return skip(name, "product above the lattice cap");
  const bool c = is_c_group(product, limits).c_group;
  if (c != (a.c_group && b.c_group)) return fail(name, std::string("product verdict ") + (c ? "true" : "false"));
  return pass(name);
}

const std::vector<std::string>& group_check_names() {
  static const std::vector<std::string> names{
      "oracle_equivalence",   "subgroup_heredity", "quotient_heredity",      "supplements_contain_complements",
      "metabelian",           "minimal_normals_prime", "squarefree_exponent", "radical_split",
      "round_trip",           "complement_conjugation", "sc_equivalence",
  };
  return names;
}

std::vector<PropertyResult> run_group_checks(const GroupFacts& f, const Limits& limits) {
  std::vector<PropertyResult> out;
  out.push_back(check_oracle_equivalence(f, limits));
  out.push_back(check_subgroup_heredity(f, limits));
  out.push_back(check_quotient_heredity(f, limits));
  if (f.group.order() <= 24)
    out.push_back(check_supplements(f, limits));
  else
    out.push_back(skip("supplements_contain_complements", "exhaustive pair check runs for order <= 24"));
  out.push_back(check_metabelian(f));
  out.push_back(check_minimal_normals(f));
  out.push_back(check_squarefree_exponent(f));
  out.push_back(check_radical_split(f, limits));
  out.push_back(check_round_trip(f, limits));
  out.push_back(check_complement_conjugation(f));
  out.push_back(check_sc_equivalence(f, limits));
  return out;
}

}  // namespace permutable
