#include "permutable/describe.hpp"

#include <fstream>
#include <sstream>

#include "permutable/catalog.hpp"

namespace permutable {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::ParseError, path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

std::size_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected a non-negative integer");
  const auto x = v.get<long long>();
  if (x < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(x);
}

std::vector<Element> as_elements(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of integers");
  std::vector<Element> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = as_count(v[i], path + "[" + std::to_string(i) + "]");
    if (x > 0xffffffffULL) fail(path + "[" + std::to_string(i) + "]", "integer out of range");
    out.push_back(static_cast<Element>(x));
  }
  return out;
}

std::vector<std::vector<Element>> as_matrix(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of arrays");
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_elements(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

void check_cap(std::size_t n, const Limits& limits, const std::string& path) {
  if (n > limits.max_order)
    throw Error(ErrorKind::OrderCapExceeded,
                path + ": order " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_order));
}

void check_schema_version(const json& desc, const std::string& path) {
  auto it = desc.find("schema_version");
  if (it == desc.end()) return;
  if (!it->is_number_integer() || it->get<long long>() != kSchemaVersion)
    fail(path + ".schema_version", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

FiniteGroup parse_group_at(const json& desc, const Limits& limits, const std::string& path) {
  if (!desc.is_object()) fail(path, "expected a group description object");
  const auto& kind_value = member(desc, "kind", path);
  if (!kind_value.is_string()) fail(path + ".kind", "expected a string");
  const auto kind = kind_value.get<std::string>();

  if (kind == "table") {
    const auto& rows = member(desc, "table", path);
    if (!rows.is_array()) fail(path + ".table", "expected an array of rows");
    check_cap(rows.size(), limits, path + ".table");
    std::vector<std::vector<long long>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto row_path = path + ".table[" + std::to_string(i) + "]";
      if (!rows[i].is_array()) fail(row_path, "expected an array of integers");
      std::vector<long long> row;
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (!rows[i][j].is_number_integer()) fail(row_path + "[" + std::to_string(j) + "]", "expected an integer");
        row.push_back(rows[i][j].get<long long>());
      }
      table.push_back(std::move(row));
    }
    return group_from_table(table, limits);
  }
  if (kind == "perm") {
    const auto degree = as_count(member(desc, "degree", path), path + ".degree");
    auto gens = as_matrix(member(desc, "generators", path), path + ".generators");
    return group_from_permutations(degree, gens, limits);
  }
  if (kind == "cyclic") {
    const auto n = as_count(member(desc, "n", path), path + ".n");
    if (n == 0) fail(path + ".n", "expected a positive integer");
    check_cap(n, limits, path);
    return cyclic(n);
  }
  if (kind == "product") {
    const auto& factors = member(desc, "factors", path);
    if (!factors.is_array() || factors.empty()) fail(path + ".factors", "expected a non-empty array");
    std::vector<FiniteGroup> parts;
    std::size_t order = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto sub = path + ".factors[" + std::to_string(i) + "]";
      parts.push_back(parse_group_at(factors[i], limits, sub));
      order *= parts.back().order();
      check_cap(order, limits, path);
    }
    auto out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = direct_product(out, parts[i]);
    return out;
  }
  if (kind == "semidirect") {
    auto actor = parse_group_at(member(desc, "actor", path), limits, path + ".actor");
    auto space = parse_group_at(member(desc, "space", path), limits, path + ".space");
    check_cap(actor.order() * space.order(), limits, path);
    const auto rows = as_matrix(member(desc, "action", path), path + ".action");
    if (rows.size() != actor.order())
      fail(path + ".action", "expected " + std::to_string(actor.order()) + " rows, one per actor element");
    std::vector<Element> table;
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (rows[b].size() != space.order())
        fail(path + ".action[" + std::to_string(b) + "]", "expected " + std::to_string(space.order()) + " entries");
      table.insert(table.end(), rows[b].begin(), rows[b].end());
    }
    return semidirect_product(GAction(std::move(actor), std::move(space), std::move(table)));
  }
  if (kind == "named") {
    const auto& name = member(desc, "name", path);
    if (!name.is_string()) fail(path + ".name", "expected a string");
    auto g = catalog_group(name.get<std::string>());
    if (!g) fail(path + ".name", "no catalog group named \"" + name.get<std::string>() + "\"");
    check_cap(g->order(), limits, path);
    return *g;
  }
  fail(path + ".kind", "unknown kind \"" + kind + "\"");
}

std::optional<CompatibleSubgroup> parse_subgroup(const json& desc, const InverseSystem& sys) {
  auto it = desc.find("subgroup");
  if (it == desc.end()) return std::nullopt;
  const std::string path = "$.subgroup";
  if (!it->is_object()) fail(path, "expected an object");
  auto check_range = [](const std::vector<Element>& xs, const FiniteGroup& g, const std::string& where) {
    for (auto x : xs)
      if (x >= g.order()) fail(where, "element " + std::to_string(x) + " is outside the level group");
  };
  if (auto top = it->find("top_generators"); top != it->end()) {
    const auto gens = as_elements(*top, path + ".top_generators");
    check_range(gens, sys.level(sys.depth()), path + ".top_generators");
    return compatible_from_top(sys, gens);
  }
  if (auto per_level = it->find("generators"); per_level != it->end()) {
    const auto gens = as_matrix(*per_level, path + ".generators");
    if (gens.size() != sys.levels().size())
      fail(path + ".generators", "expected one generator list per level (" + std::to_string(sys.levels().size()) + ")");
    CompatibleSubgroup h;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      check_range(gens[k], sys.level(k), path + ".generators[" + std::to_string(k) + "]");
      h.levels.push_back(subgroup_closure(sys.level(k), gens[k]));
    }
    return h;
  }
  fail(path, "expected \"top_generators\" or \"generators\"");
}

}  // namespace

FiniteGroup parse_group(const nlohmann::json& desc, const Limits& limits) {
  if (desc.is_object()) check_schema_version(desc, "$");
  return parse_group_at(desc, limits, "$");
}

SystemDescription parse_system(const nlohmann::json& desc, const Limits& limits) {
  if (!desc.is_object()) fail("$", "expected a system description object");
  check_schema_version(desc, "$");

  if (auto fam = desc.find("family"); fam != desc.end()) {
    if (!fam->is_string()) fail("$.family", "expected a string");
    FamilyParams params;
    if (desc.contains("p")) params.p = as_count(desc["p"], "$.p");
    if (desc.contains("q")) params.q = as_count(desc["q"], "$.q");
    const auto depth = as_count(member(desc, "depth", "$"), "$.depth");
    auto sys = example_system(fam->get<std::string>(), params, depth, limits);
    auto sub = parse_subgroup(desc, sys);
    return SystemDescription{std::move(sys), std::move(sub), fam->get<std::string>()};
  }

  const auto& levels = member(desc, "levels", "$");
  if (!levels.is_array() || levels.empty()) fail("$.levels", "expected a non-empty array");
  std::vector<FiniteGroup> groups;
  for (std::size_t k = 0; k < levels.size(); ++k)
    groups.push_back(parse_group_at(levels[k], limits, "$.levels[" + std::to_string(k) + "]"));
  auto bonds = desc.contains("bonds") ? as_matrix(desc["bonds"], "$.bonds") : std::vector<std::vector<Element>>{};
  InverseSystem sys(std::move(groups), std::move(bonds), limits);
  auto sub = parse_subgroup(desc, sys);
  return SystemDescription{std::move(sys), std::move(sub), {}};
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "malformed JSON at byte " + std::to_string(e.byte));
  }
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace permutable
