// Command line front end: parse, indec, silting, repdim, verify,
// tilting-scan over bundled fixtures or user files.

#include <CLI11.hpp>
#include <iostream>

#include "silting/cli_commands.hpp"

using namespace silting;

int main(int argc, char** argv) {
  CLI::App app{"workbench for bound quiver algebras and two-term silting"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::uint32_t field = 2;
  app.add_option("--field", field, "prime field modulus")->capture_default_str();
  app.add_option("--bound", cfg.bound, "vertex dimension bound for catalogs")
      ->capture_default_str();
  app.add_option("--max-candidates", cfg.max_candidates,
                 "cap on generator-cogenerator candidates in repdim searches")
      ->capture_default_str();
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fixtures-dir", cfg.fixtures_dir,
                 "directory with the bundled fixture files");

  std::string target, example, scan_target, against;
  bool verify_all = false;

  CLI::App* c_parse = app.add_subcommand("parse", "parse an algebra file");
  c_parse->add_option("target", target)->required();
  CLI::App* c_indec =
      app.add_subcommand("indec", "indecomposable catalog with tau orbits");
  c_indec->add_option("target", target)->required();
  CLI::App* c_silting = app.add_subcommand(
      "silting", "silting/tilting verdicts and torsion report for a complex");
  c_silting->add_option("target", target)->required();
  CLI::App* c_repdim =
      app.add_subcommand("repdim", "representation dimension report");
  c_repdim->add_option("target", target)->required();
  CLI::App* c_verify =
      app.add_subcommand("verify", "run the bundled end-to-end checks");
  c_verify->add_option("--example", example, "scenario id: 4.1, 4.2 or 4.3");
  c_verify->add_flag("--all", verify_all, "every bundled check");
  c_verify->add_option("--scan", scan_target,
                       "enumerate silting complexes over an algebra and "
                       "check the comparison theorem on each");
  CLI::App* c_tilt = app.add_subcommand(
      "tilting-scan", "classical tilting modules with their flags");
  c_tilt->add_option("target", target)->required();
  c_tilt->add_option("--against", against,
                     "complex whose torsion class is compared against");

  CLI11_PARSE(app, argc, argv);

  try {
    Fp::set_modulus(field);
    cfg.field = field;
    cfg.json = format == "json";
    CommandResult res;
    if (c_parse->parsed()) res = cmd_parse(cfg, target);
    if (c_indec->parsed()) res = cmd_indec(cfg, target);
    if (c_silting->parsed()) res = cmd_silting(cfg, target);
    if (c_repdim->parsed()) res = cmd_repdim(cfg, target);
    if (c_verify->parsed()) {
      int modes = (example.empty() ? 0 : 1) + (verify_all ? 1 : 0) +
                  (scan_target.empty() ? 0 : 1);
      if (modes != 1) {
        std::cerr << "verify needs exactly one of --example, --all, --scan\n";
        return 2;
      }
      if (!example.empty()) res = cmd_verify_example(cfg, example);
      if (verify_all) res = cmd_verify_all(cfg);
      if (!scan_target.empty()) res = cmd_verify_scan(cfg, scan_target);
    }
    if (c_tilt->parsed()) res = cmd_tilting_scan(cfg, target, against);
    if (cfg.json)
      std::cout << res.data.dump(2) << "\n";
    else
      std::cout << res.text;
    return res.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
