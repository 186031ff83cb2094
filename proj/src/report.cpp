#include "permutable/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "permutable/catalog.hpp"
#include "permutable/complement.hpp"
#include "permutable/describe.hpp"
#include "permutable/properties.hpp"

namespace permutable {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json header(const char* operation, const ReportFlags& flags) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["operation"] = operation;
  r["caps"] = limits_json(flags.limits);
  return r;
}

json element_json(const FiniteGroup& g, Element x) {
  return json{{"index", x}, {"label", g.label(x)}, {"order", g.element_order(x)}};
}

json stages_json(const std::vector<Stage>& stages) {
  json out = json::array();
  for (const auto& s : stages) out.push_back(json{{"name", s.name}, {"ok", s.ok}, {"detail", s.detail}});
  return out;
}

json decomposition_json(const FiniteGroup& g, const CernikovaDecomposition& d) {
  json a = json::array(), b = json::array();
  for (const auto& x : d.a_generators) a.push_back(element_json(g, x.element));
  for (const auto& x : d.b_generators) b.push_back(element_json(g, x.element));
  return json{{"a", a}, {"b", b}, {"a_order", d.a_subgroup.order()}, {"b_order", d.b_subgroup.order()}};
}

json chain_json(const InverseSystem& sys, const CompatibleSubgroup& h, const Limits& limits) {
  json out;
  json subgroup = json::array();
  for (const auto& x : h.levels) subgroup.push_back(subgroup_json(x));
  out["subgroup"] = subgroup;
  try {
    validate_compatible(sys, h);
    const auto chain = lift_complement_chain(sys, h, limits);
    json levels = json::array();
    for (const auto& k : chain.levels) levels.push_back(subgroup_json(k));
    out["ok"] = true;
    out["complements"] = levels;
    out["error"] = nullptr;
  } catch (const Error& e) {
    if (e.is_cap_error()) throw;
    out["ok"] = false;
    out["complements"] = nullptr;
    out["error"] = e.what();
    out["error_level"] = e.level() ? json(*e.level()) : json(nullptr);
  }
  return out;
}

json profinite_body(const SystemDescription& desc, const ReportFlags& flags) {
  const auto& sys = desc.system;
  json r;
  r["depth"] = sys.depth();

  const auto validation = validate_system(sys);
  json bonds = json::array();
  for (const auto& b : validation.bonds)
    bonds.push_back(json{{"bond", b.bond},
                         {"homomorphism", b.homomorphism},
                         {"surjective", b.surjective},
                         {"detail", b.detail}});
  r["validation"] = json{{"valid", validation.valid}, {"bonds", bonds}};

  const auto verdict = is_profinite_c_truncated(sys, flags.limits);
  r["c_groups"] = verdict.c_groups;
  r["failing_level"] = verdict.failing_level ? json(*verdict.failing_level) : json(nullptr);

  json levels = json::array();
  std::optional<TheoremCReport> tc;
  if (validation.valid) tc = theorem_c_report(sys, flags.limits);
  for (std::size_t k = 0; k < verdict.levels.size(); ++k) {
    const auto& v = verdict.levels[k];
    json level{{"level", v.level},
               {"order", v.order},
               {"c_group", v.c_group},
               {"method", v.method},
               {"witness", v.witness ? subgroup_json(*v.witness) : json(nullptr)}};
    const auto& g = sys.level(k);
    level["exponent"] = exponent(g);
    if (tc) {
      const auto& s = tc->levels[k];
      level["center_order"] = s.center_order;
      level["derived_order"] = s.derived_order;
      level["index"] = s.index;
    }
    levels.push_back(level);
  }
  r["levels"] = levels;

  if (tc) {
    json indices = json::array(), exponents = json::array();
    for (const auto& s : tc->levels) {
      indices.push_back(s.index);
      exponents.push_back(s.exponent);
    }
    r["centre_derived_index"] = json{{"indices", indices},
                                     {"exponents", exponents},
                                     {"index_trend", tc->index_trend},
                                     {"exponent_trend", tc->exponent_trend},
                                     {"constant_system", tc->constant_system},
                                     {"limit_is_c_group", tc->limit_is_c_group ? json(*tc->limit_is_c_group)
                                                                                : json(nullptr)},
                                     {"note", tc->note}};
  } else {
    r["centre_derived_index"] = nullptr;
  }

  if (desc.subgroup && validation.valid)
    r["chain"] = chain_json(sys, *desc.subgroup, flags.limits);
  else
    r["chain"] = nullptr;
  return r;
}

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

void render_value(std::ostringstream& out, const json& v, int indent, const std::string& key);

std::string scalar_text(const json& v) {
  if (v.is_null()) return "null";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

void render_value(std::ostringstream& out, const json& v, int indent, const std::string& key) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string prefix = key.empty() ? pad + "-" : pad + key + ":";
  if (!v.is_structured()) {
    out << prefix << ' ' << scalar_text(v) << '\n';
  } else if (is_flat_array(v)) {
    out << prefix << " [";
    bool first = true;
    for (const auto& x : v) {
      out << (first ? "" : ", ") << scalar_text(x);
      first = false;
    }
    out << "]\n";
  } else if (v.is_array()) {
    out << prefix << '\n';
    for (const auto& x : v) render_value(out, x, indent + 1, "");
  } else {
    out << prefix << '\n';
    for (auto it = v.begin(); it != v.end(); ++it) render_value(out, it.value(), indent + 1, it.key());
  }
}

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json subgroup_json(const Subgroup& h) {
  json elements = json::array(), labels = json::array();
  for (auto x : h.elements()) {
    elements.push_back(x);
    labels.push_back(h.parent().label(x));
  }
  return json{{"order", h.order()}, {"elements", elements}, {"labels", labels}};
}

json limits_json(const Limits& limits) {
  return json{{"max_order", limits.max_order},
              {"lattice_max_order", limits.lattice_max_order},
              {"max_subgroups", limits.max_subgroups},
              {"sc_max_order", limits.sc_max_order},
              {"system_max_total", limits.system_max_total}};
}

json cmd_analyze(const std::filesystem::path& path, const ReportFlags& flags) {
  const Stopwatch clock;
  const auto text = read_file(path);
  auto r = header("analyze", flags);
  r["input"] = json{{"path", path.string()}, {"digest", input_digest(text)}};
  const auto g = parse_group(parse_json_text(text), flags.limits);

  r["group"] = json{{"order", g.order()}, {"abelian", is_abelian(g)}, {"exponent", exponent(g)}};
  const auto decomposition = cernikova_decompose(g, flags.limits);
  if (g.order() <= flags.limits.lattice_max_order) {
    const auto verdict = is_c_group(g, flags.limits);
    r["method"] = "lattice";
    r["c_group"] = verdict.c_group;
    r["subgroups"] = verdict.subgroups;
    r["witness"] = verdict.witness ? subgroup_json(*verdict.witness) : json(nullptr);
  } else {
    r["method"] = "structural";
    r["c_group"] = decomposition.decomposition.has_value();
    r["subgroups"] = nullptr;
    r["witness"] = nullptr;
  }
  r["decomposition"] =
      decomposition.decomposition ? decomposition_json(g, *decomposition.decomposition) : json(nullptr);
  r["stages"] = stages_json(decomposition.stages);
  r["failed_stage"] = decomposition.failed_stage;
  r["sc_group"] = flags.sc ? json(is_sc_group(g, flags.limits)) : json(nullptr);
  if (flags.timing) r["timing_ms"] = clock.elapsed_ms();
  return r;
}

json cmd_profinite(const std::filesystem::path& path, const ReportFlags& flags) {
  const Stopwatch clock;
  const auto text = read_file(path);
  auto r = header("profinite", flags);
  r["input"] = json{{"path", path.string()}, {"digest", input_digest(text)}};
  const auto desc = parse_system(parse_json_text(text), flags.limits);
  r["family"] = desc.family.empty() ? json(nullptr) : json(desc.family);
  merge(r, profinite_body(desc, flags));
  if (flags.timing) r["timing_ms"] = clock.elapsed_ms();
  return r;
}

json cmd_profinite_family(const std::string& family, const FamilyParams& params, std::size_t depth,
                          const ReportFlags& flags) {
  const Stopwatch clock;
  auto r = header("profinite", flags);
  r["input"] = json{{"family", family}, {"p", params.p}, {"q", params.q}, {"depth", depth}};
  r["family"] = family;
  SystemDescription desc{example_system(family, params, depth, flags.limits), std::nullopt, family};
  merge(r, profinite_body(desc, flags));
  if (flags.timing) r["timing_ms"] = clock.elapsed_ms();
  return r;
}

json cmd_catalog(const ReportFlags& flags) {
  const Stopwatch clock;
  auto r = header("catalog", flags);
  r["input"] = nullptr;
  r["checks"] = group_check_names();

  std::size_t passed = 0, failed = 0, skipped = 0;
  auto tally = [&](Outcome o) {
    if (o == Outcome::Pass) ++passed;
    if (o == Outcome::Fail) ++failed;
    if (o == Outcome::Skip) ++skipped;
  };

  std::vector<GroupFacts> facts;
  json groups = json::array();
  for (const auto& entry : catalog()) {
    facts.push_back(gather_facts(entry.group, flags.limits));
    const auto& f = facts.back();
    json results = json::object();
    json failures = json::array();
    for (const auto& res : run_group_checks(f, flags.limits)) {
      tally(res.outcome);
      results[res.name] = to_string(res.outcome);
      if (res.outcome == Outcome::Fail) failures.push_back(json{{"check", res.name}, {"detail", res.detail}});
    }
    groups.push_back(json{{"name", entry.name},
                          {"order", f.group.order()},
                          {"c_group", f.c_group},
                          {"subgroups", f.lattice.size()},
                          {"results", results},
                          {"failures", failures}});
  }
  r["groups"] = groups;

  // Direct products of small catalog groups (both factors non-trivial, order <= 12, product <= 48).
  json pairs = json::array();
  for (std::size_t i = 0; i < facts.size(); ++i) {
    const auto oi = facts[i].group.order();
    if (oi < 2 || oi > 12) continue;
    for (std::size_t j = i; j < facts.size(); ++j) {
      const auto oj = facts[j].group.order();
      if (oj < 2 || oj > 12 || oi * oj > 48) continue;
      const auto res = check_product_closure(facts[i], facts[j], flags.limits);
      tally(res.outcome);
      pairs.push_back(json{{"left", catalog()[i].name},
                           {"right", catalog()[j].name},
                           {"result", to_string(res.outcome)},
                           {"detail", res.detail}});
    }
  }
  r["product_closure"] = pairs;
  r["summary"] = json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"all_pass", failed == 0}};
  if (flags.timing) r["timing_ms"] = clock.elapsed_ms();
  return r;
}

std::string render_json(const json& report) { return report.dump(2) + "\n"; }

std::string render_text(const json& report) {
  std::ostringstream out;
  if (!report.is_object()) {
    render_value(out, report, 0, "report");
    return out.str();
  }
  for (auto it = report.begin(); it != report.end(); ++it) render_value(out, it.value(), 0, it.key());
  return out.str();
}

}  // namespace permutable
