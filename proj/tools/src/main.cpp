#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using flc::cli::CommandResult;
using flc::cli::ConfigError;
using flc::cli::RunConfig;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kRuntime = 3 };

nlohmann::json read_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
}

void emit(const CommandResult& r, const std::vector<std::string>& formats, const std::string& out) {
  const std::set<std::string> wanted(formats.begin(), formats.end());
  if (!out.empty()) fs::create_directories(out);
  for (const auto& a : r.artifacts) {
    if (!wanted.count(a.ext)) continue;
    if (out.empty()) {
      std::cout << a.content;
    } else {
      std::ofstream f(fs::path(out) / (a.name + "." + a.ext), std::ios::binary);
      f << a.content;
      if (!f) throw flc::Error("cannot write " + a.name + "." + a.ext);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite local complexity point sets: patches, hulls, groupoids and positive-type witnesses"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, preset, out;
  std::vector<std::string> formats;
  flc::cli::Overrides ov;
  std::uint64_t seed = 0;
  std::string radius, sample;

  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--preset", preset, "Descriptor preset; overrides the config's descriptor");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed");
  auto* radius_opt = app.add_option("--radius", radius, "Patch radius (exact scalar such as 3 or 3/2)");
  auto* sample_opt = app.add_option("--sample", sample, "Sample window half-width");
  app.add_option("--out", out, "Write artifacts into this directory instead of stdout");
  app.add_option("--format", formats, "Artifact formats to emit")->check(CLI::IsMember({"json", "csv", "svg"}));

  auto* gen = app.add_subcommand("generate", "Enumerate the point set in the sample window");
  auto* check = app.add_subcommand("check", "Run a verification suite");
  std::string which = "all";
  check->add_option("suite", which, "Suite name")->check(CLI::IsMember(flc::cli::suite_names()));
  auto* patches = app.add_subcommand("patches", "Patch catalog at the configured radius");
  auto* hull = app.add_subcommand("hull", "Refinement maps, clopen partition, separations, convergence");
  auto* groupoid = app.add_subcommand("groupoid", "Arrows, axiom checks and bisections");
  auto* witness = app.add_subcommand("witness", "Positive-type witnesses and support checks");
  auto* report = app.add_subcommand("report", "All artifacts plus the full check report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kConfig;
  }

  std::optional<RunConfig> loaded;
  try {
    nlohmann::json j = read_config(config_path);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (!preset.empty()) j["descriptor"] = preset;
    if (*seed_opt) ov.seed = seed;
    if (*radius_opt) ov.radius = radius;
    if (*sample_opt) ov.sample = sample;
    loaded = flc::cli::load_config(j, ov);
  } catch (const flc::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  }
  if (formats.empty()) {
    formats = gen->parsed() ? std::vector<std::string>{"csv", "svg"} : std::vector<std::string>{"json"};
  }

  const RunConfig& cfg = *loaded;
  try {
    CommandResult r;
    if (gen->parsed()) r = flc::cli::cmd_generate(cfg);
    else if (check->parsed()) r = flc::cli::cmd_check(cfg, which);
    else if (patches->parsed()) r = flc::cli::cmd_patches(cfg);
    else if (hull->parsed()) r = flc::cli::cmd_hull(cfg);
    else if (groupoid->parsed()) r = flc::cli::cmd_groupoid(cfg);
    else if (witness->parsed()) r = flc::cli::cmd_witness(cfg);
    else if (report->parsed()) r = flc::cli::cmd_report(cfg);
    emit(r, formats, out);
    return r.pass ? kPass : kFail;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
}
