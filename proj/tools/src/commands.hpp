#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace flc::cli {

struct Artifact {
  std::string name;  // file stem
  std::string ext;   // json, csv or svg
  std::string content;
};

struct CommandResult {
  bool pass = true;
  std::vector<Artifact> artifacts;
};

/// Suite names accepted by `check`.
const std::vector<std::string>& suite_names();

CommandResult cmd_generate(const RunConfig& c);
CommandResult cmd_check(const RunConfig& c, const std::string& which);
CommandResult cmd_patches(const RunConfig& c);
CommandResult cmd_hull(const RunConfig& c);
CommandResult cmd_groupoid(const RunConfig& c);
CommandResult cmd_witness(const RunConfig& c);
/// Every artifact of the other commands plus the `check all` report.
CommandResult cmd_report(const RunConfig& c);

}  // namespace flc::cli
