#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flc/error.hpp"
#include "flc/pointset.hpp"

namespace flc::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  nlohmann::json descriptor_spec;
  PointSetDescriptor descriptor;
  QuadraticScalar radius;
  QuadraticScalar arrow_radius;
  Window sample;
  Window k;
  Window u;
  double eps = 1e-6;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t support_pairs = 2000;
  std::size_t max_n = 8;
  std::size_t pairs = 1000;
  std::size_t triples = 300;
  std::size_t bisections = 100;
  std::size_t max_separations = 200;
  double tol = 1e-6;
  std::vector<QuadraticScalar> hull_radii;
};

/// Flag values that override the config file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> radius;
  std::optional<std::string> sample;
};

/// Exact scalar from a JSON string or integer; floats are rejected.
QuadraticScalar scalar_from_json(const nlohmann::json& j, const std::string& what);
/// A scalar r (the box [-r, r]^dim) or {"lo": [...], "hi": [...], "open": bool}.
Window window_from_json(const nlohmann::json& j, std::size_t dim, const std::string& what);
/// A preset name, {"preset": name}, or a full lattice / model-set description.
PointSetDescriptor descriptor_from_json(const nlohmann::json& j);

RunConfig load_config(const nlohmann::json& j, const Overrides& o);
RunConfig load_config_file(const std::string& path, const Overrides& o);

nlohmann::json parameters_json(const RunConfig& c);

}  // namespace flc::cli
