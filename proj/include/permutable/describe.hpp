#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "permutable/group.hpp"
#include "permutable/profinite.hpp"

namespace permutable {

inline constexpr int kSchemaVersion = 1;

/// Group description (see docs/schema.md):
///   {"kind":"table","table":[[...],...]}
///   {"kind":"perm","degree":k,"generators":[[...],...]}
///   {"kind":"cyclic","n":k}
///   {"kind":"product","factors":[desc,...]}
///   {"kind":"semidirect","actor":desc,"space":desc,"action":[[...],...]}
///   {"kind":"named","name":"S3"}            (bundled catalog entry)
/// Errors carry the JSON path of the offending value.
FiniteGroup parse_group(const nlohmann::json& desc, const Limits& limits = {});

struct SystemDescription {
  InverseSystem system;
  std::optional<CompatibleSubgroup> subgroup;
  std::string family;  // empty for explicit level lists
};

/// {"levels":[desc,...],"bonds":[[...],...]} or
/// {"family":"pq-power","p":3,"q":2,"depth":3}; either form may carry
/// "subgroup":{"top_generators":[...]} or "subgroup":{"generators":[[...],...]}.
SystemDescription parse_system(const nlohmann::json& desc, const Limits& limits = {});

/// Reads and parses a JSON file; malformed input raises ParseError with the
/// byte offset.
nlohmann::json load_json(const std::filesystem::path& path);
nlohmann::json parse_json_text(const std::string& text);

}  // namespace permutable
