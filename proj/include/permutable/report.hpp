#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "permutable/group.hpp"
#include "permutable/profinite.hpp"

namespace permutable {

struct ReportFlags {
  Limits limits;
  bool sc = false;      // run the SC test (costly)
  bool timing = false;  // add wall-clock timings; off by default so output is reproducible
};

/// C verdict, decomposition or failing stage, and optionally the SC verdict
/// for a group description file.
nlohmann::json cmd_analyze(const std::filesystem::path& path, const ReportFlags& flags);

/// Validation, levelwise verdicts, the centre/derived index report and,
/// when the file names a compatible subgroup, a lifted complement chain.
nlohmann::json cmd_profinite(const std::filesystem::path& path, const ReportFlags& flags);
nlohmann::json cmd_profinite_family(const std::string& family, const FamilyParams& params, std::size_t depth,
                                    const ReportFlags& flags);

/// Invariant suite over the bundled catalog, as a pass/fail matrix.
nlohmann::json cmd_catalog(const ReportFlags& flags);

/// Human-readable rendering with exactly the fields of the JSON report.
std::string render_text(const nlohmann::json& report);

/// Deterministic JSON text (sorted keys, two-space indent, trailing newline).
std::string render_json(const nlohmann::json& report);

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(std::string_view bytes);

nlohmann::json subgroup_json(const Subgroup& h);
nlohmann::json limits_json(const Limits& limits);

}  // namespace permutable
