#pragma once

// Command implementations behind the CLI front end, returning both the text
// rendering and the JSON payload so the two can be golden-tested against
// each other.

#include <string>

#include "silting/parser.hpp"
#include "silting/report.hpp"

namespace silting {

struct RunConfig {
  std::uint32_t field = 2;
  int bound = 12;
  int max_candidates = 256;
  bool json = false;
  std::string fixtures_dir;
};

struct CommandResult {
  int exit_code = 0;  // 0 pass/inapplicable, 1 any failure, 2 usage/parse
  std::string text;
  Json data;

  std::string output() const { return text; }
};

struct CheckRow {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

AlgebraPtr resolve_algebra(const RunConfig& cfg, const std::string& target);
TwoTermComplex resolve_complex(const RunConfig& cfg, const std::string& target);
Representation resolve_module(const RunConfig& cfg, const std::string& target);

CommandResult cmd_parse(const RunConfig& cfg, const std::string& target);
CommandResult cmd_indec(const RunConfig& cfg, const std::string& target);
CommandResult cmd_silting(const RunConfig& cfg, const std::string& target);
CommandResult cmd_repdim(const RunConfig& cfg, const std::string& target);
CommandResult cmd_verify_example(const RunConfig& cfg,
                                 const std::string& which);
CommandResult cmd_verify_all(const RunConfig& cfg);
CommandResult cmd_verify_scan(const RunConfig& cfg, const std::string& target);
CommandResult cmd_tilting_scan(const RunConfig& cfg, const std::string& target,
                               const std::string& against);

// the per-complex structural check table used by verify --all
std::vector<CheckRow> structural_checks(const SiltingContext& ctx,
                                        const IndecCatalog* cat);

}  // namespace silting
