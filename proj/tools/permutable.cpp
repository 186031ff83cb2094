#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permutable/describe.hpp"
#include "permutable/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

void emit(const nlohmann::json& report, bool as_json) {
  std::cout << (as_json ? permutable::render_json(report) : permutable::render_text(report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutable complements: C-group analysis of finite groups and inverse systems"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_order, max_subgroups;
  bool as_json = false, timing = false;
  auto* analyze = app.add_subcommand("analyze", "Decide the C-group property of a described group");
  std::string group_file;
  bool sc = false;
  analyze->add_option("file", group_file, "Group description (JSON)")->required();
  analyze->add_flag("--sc", sc, "Also run the SC-group test");

  auto* profinite = app.add_subcommand("profinite", "Analyse a truncated inverse system");
  std::string system_file, family;
  permutable::FamilyParams params;
  std::size_t depth = 3;
  profinite->add_option("file", system_file, "System description (JSON)");
  profinite->add_option("--family", family, "Built-in family: pq-power, prime-column or elementary");
  profinite->add_option("--p", params.p, "Prime p of the family");
  profinite->add_option("--q", params.q, "Prime q of the family");
  profinite->add_option("--depth", depth, "Truncation depth of the family");

  auto* catalog = app.add_subcommand("catalog", "Run the invariant suite over the bundled catalog");

  for (auto* sub : {analyze, profinite, catalog}) {
    sub->add_flag("--json", as_json, "Emit the JSON report");
    sub->add_flag("--timing", timing, "Include wall-clock timings (output is then not reproducible)");
    sub->add_option("--max-order", max_order, "Largest group order for lattice enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-subgroups", max_subgroups, "Largest number of subgroups enumerated")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*profinite && system_file.empty() == family.empty()) {
    std::cerr << "error: profinite needs exactly one of a system file or --family\n";
    return kExitInput;
  }

  try {
    permutable::ReportFlags flags;
    flags.limits = permutable::Limits::from_env();
    if (max_order) flags.limits.apply_max_order(*max_order);
    if (max_subgroups) flags.limits.max_subgroups = *max_subgroups;
    flags.sc = sc;
    flags.timing = timing;

    if (*analyze) {
      emit(permutable::cmd_analyze(group_file, flags), as_json);
    } else if (*profinite) {
      emit(family.empty() ? permutable::cmd_profinite(system_file, flags)
                          : permutable::cmd_profinite_family(family, params, depth, flags),
           as_json);
    } else {
      emit(permutable::cmd_catalog(flags), as_json);
    }
  } catch (const permutable::Error& e) {
    std::cerr << "error: " << e.what();
    if (e.level()) std::cerr << " (level " << *e.level() << ")";
    std::cerr << '\n';
    return e.is_cap_error() ? kExitCap : kExitInput;
  }
  return 0;
}
