// perdomcoh command-line interface.  All mathematics lives in the library;
// this file only parses arguments, shuttles configs in, and renders reports.
//
// Exit codes: 0 success, 1 malformed input or resource cap, 2 validation
// failure (including an empty period domain), 3 a requested consistency
// check failed.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "perdomcoh/catalog.hpp"
#include "perdomcoh/report.hpp"

namespace {

struct CliOverrides {
  bool check = false;
  bool pages = false;
  bool euler = false;
  std::string format;
  long long cap = 0;
};

int run_scenario(pdc::ScenarioConfig cfg, const CliOverrides& ov) {
  if (ov.check) cfg.options.checks = true;
  if (ov.pages) cfg.options.pages = true;
  if (ov.euler) cfg.options.euler = true;
  if (!ov.format.empty()) cfg.options.format = ov.format;
  if (ov.cap > 0) cfg.options.cap = static_cast<std::size_t>(ov.cap);
  if (cfg.options.format != "text" && cfg.options.format != "json" &&
      cfg.options.format != "csv")
    throw pdc::ConfigError("--format must be text, json, or csv");

  pdc::PeriodDatum datum = pdc::realize(cfg);
  pdc::ValidationReport vr;
  auto vd = pdc::ValidatedDatum::create(std::move(datum), &vr);
  if (!vd) {
    std::cout << pdc::build_failure_report(cfg, vr).render(cfg.options.format);
    return 2;
  }
  pdc::EngineContext ctx = pdc::make_context(*vd, cfg.options.cap);
  pdc::ResultReport report = pdc::build_report(cfg, ctx, cfg.options);
  std::cout << report.render(cfg.options.format);
  if (!ctx.non_empty) return 2;
  if (cfg.options.checks)
    for (const auto& c : report.j["checks"]["results"])
      if (!c["passed"].get<bool>()) return 3;
  return 0;
}

int selftest() {
  bool all_ok = true;
  for (const std::string& name : pdc::catalog_names()) {
    std::string verdict = "pass";
    try {
      pdc::ScenarioConfig cfg = pdc::catalog(name);
      pdc::PeriodDatum datum = pdc::realize(cfg);
      auto vd = pdc::ValidatedDatum::create(std::move(datum));
      if (!vd) {
        verdict = "FAIL (validation)";
      } else {
        pdc::EngineContext ctx = pdc::make_context(*vd);
        std::size_t summands = pdc::compute_cohomology(ctx).size();
        for (const auto& c : pdc::run_engine_checks(ctx))
          if (!c.passed) verdict = "FAIL (" + c.name + ")";
        if (verdict == "pass")
          verdict = "pass (" + std::to_string(summands) + " summands)";
      }
    } catch (const std::exception& e) {
      verdict = std::string("FAIL (") + e.what() + ")";
    }
    std::cout << name << std::string(name.size() < 24 ? 24 - name.size() : 1, ' ')
              << verdict << "\n";
    if (verdict.compare(0, 4, "pass") != 0) all_ok = false;
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form compactly supported cohomology of basic p-adic period domains"};
  app.require_subcommand(1);

  std::string config_path, name;
  CliOverrides ov;
  bool emit = false;

  CLI::App* run = app.add_subcommand("run", "evaluate a JSON scenario config");
  run->add_option("config", config_path, "path to the scenario config")->required();
  run->add_flag("--check", ov.check, "run the Grothendieck-group consistency checks");
  run->add_flag("--pages", ov.pages, "include the E1/E2 page tables");
  run->add_flag("--euler", ov.euler, "include the Euler-characteristic summary");
  run->add_option("--format", ov.format, "output format: text, json, or csv");
  run->add_option("--cap", ov.cap, "Weyl-group enumeration cap");

  CLI::App* cat = app.add_subcommand("catalog", "run or emit a builtin scenario");
  cat->add_option("name", name, "catalog entry; omit to list all entries");
  cat->add_flag("--emit", emit, "print the canonical config JSON instead of running");
  cat->add_flag("--check", ov.check, "run the Grothendieck-group consistency checks");
  cat->add_flag("--pages", ov.pages, "include the E1/E2 page tables");
  cat->add_flag("--euler", ov.euler, "include the Euler-characteristic summary");
  cat->add_option("--format", ov.format, "output format: text, json, or csv");
  cat->add_option("--cap", ov.cap, "Weyl-group enumeration cap");

  app.add_subcommand("selftest", "validate and check every catalog entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_scenario(pdc::parse_config_file(config_path), ov);
    if (cat->parsed()) {
      if (name.empty()) {
        for (const std::string& n : pdc::catalog_names()) std::cout << n << "\n";
        return 0;
      }
      pdc::ScenarioConfig cfg = pdc::catalog(name);
      if (emit) {
        std::cout << pdc::config_to_json(cfg).dump(2) << "\n";
        return 0;
      }
      return run_scenario(std::move(cfg), ov);
    }
    return selftest();
  } catch (const pdc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const pdc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
