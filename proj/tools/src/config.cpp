#include "config.hpp"

#include <fstream>

#include "flc/error.hpp"
#include "flc/presets.hpp"
#include "serialize.hpp"

namespace flc::cli {

using nlohmann::json;

namespace {

std::size_t count_field(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned()) throw ConfigError(std::string(key) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

double positive_real(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& x = j.at(key);
  const double v = x.is_number_float() ? x.get<double>() : scalar_from_json(x, key).to_double();
  if (!(v > 0.0)) throw ConfigError(std::string(key) + " must be positive");
  return v;
}

std::vector<QuadraticScalar> scalars(const json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + " must be an array");
  std::vector<QuadraticScalar> out;
  for (const auto& v : j) out.push_back(scalar_from_json(v, what));
  return out;
}

GroupKind group_from_json(const json& j, const char* key) {
  if (!j.contains(key)) return GroupKind::abelian;
  try {
    return group_kind_from_string(j.at(key).get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

CoordinateMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + " must be an array of rows");
  CoordinateMatrix m;
  for (const auto& row : j) m.push_back(scalars(row, what));
  return m;
}

std::vector<GroupElement> elements(const json& j, GroupKind kind, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + " must be an array of points");
  std::vector<GroupElement> out;
  for (const auto& row : j) out.emplace_back(kind, scalars(row, what));
  return out;
}

}  // namespace

QuadraticScalar scalar_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return QuadraticScalar(j.get<long>());
  if (!j.is_string()) throw ConfigError(what + ": numbers must be exact strings such as \"3/2\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

Window window_from_json(const json& j, std::size_t dim, const std::string& what) {
  Window w;
  if (j.is_object()) {
    if (!j.contains("lo") || !j.contains("hi")) throw ConfigError(what + " needs lo and hi");
    w = Window::box(scalars(j.at("lo"), what), scalars(j.at("hi"), what), j.value("open", false));
  } else {
    const QuadraticScalar r = scalar_from_json(j, what);
    if (scalar_sign(r) < 0) throw ConfigError(what + " radius must be non-negative");
    w = Window::ball(dim, r);
  }
  if (w.dim() != dim) throw ConfigError(what + " has dimension " + std::to_string(w.dim()) + ", expected " + std::to_string(dim));
  try {
    w.validate();
  } catch (const Error& e) {
    throw ConfigError(what + ": " + e.what());
  }
  return w;
}

PointSetDescriptor descriptor_from_json(const json& j) {
  try {
    if (j.is_string()) return presets::by_name(j.get<std::string>());
    if (!j.is_object()) throw ConfigError("descriptor must be a preset name or an object");
    if (j.contains("preset")) return presets::by_name(j.at("preset").get<std::string>());
    const std::string type = j.value("type", "");
    const GroupKind kind = group_from_json(j, "group");
    const std::string label = j.value("label", type);
    if (type == "lattice") {
      std::vector<GroupElement> offsets;
      if (j.contains("offsets")) offsets = elements(j.at("offsets"), kind, "offsets");
      return PointSetDescriptor::lattice(label, kind, elements(j.at("basis"), kind, "basis"), std::move(offsets));
    }
    if (type == "model_set") {
      const GroupKind internal = group_from_json(j, "internal_group");
      const CoordinateMatrix phys = matrix_from_json(j.at("phys_map"), "phys_map");
      const CoordinateMatrix in = matrix_from_json(j.at("int_map"), "int_map");
      Window w = window_from_json(j.at("window"), in.size(), "window");
      return PointSetDescriptor::model_set(label, kind, phys, in, internal, std::move(w));
    }
    throw ConfigError("descriptor type must be \"lattice\" or \"model_set\"");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("descriptor: ") + e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("descriptor: ") + e.what());
  }
}

RunConfig load_config(const json& j, const Overrides& o) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    const json spec = j.value("descriptor", json("z"));
    RunConfig c{spec, descriptor_from_json(spec), {}, {}, {}, {}, {}, 1e-6, 1, 200, 2000, 8, 1000, 300, 100, 200, 1e-6, {}};
    const std::size_t dim = c.descriptor.dim();
    const bool heis = c.descriptor.kind() == GroupKind::heisenberg;

    c.radius = o.radius ? scalar_from_json(json(*o.radius), "--radius")
                        : scalar_from_json(j.value("radius", json(heis ? "2" : "3")), "radius");
    c.arrow_radius = scalar_from_json(j.value("arrow_radius", json("1")), "arrow_radius");
    if (scalar_sign(c.radius) <= 0 || scalar_sign(c.arrow_radius) <= 0) throw ConfigError("radii must be positive");
    if (c.radius < c.arrow_radius) throw ConfigError("arrow_radius must not exceed radius");

    c.sample = o.sample ? window_from_json(json(*o.sample), dim, "--sample")
                        : window_from_json(j.value("sample", json(heis ? "2" : "20")), dim, "sample");
    c.k = j.contains("k") ? window_from_json(j.at("k"), dim, "k") : Window::ball(dim, c.arrow_radius);
    if (j.contains("u")) {
      c.u = window_from_json(j.at("u"), dim, "u");
    } else {
      c.u = Window::ball(dim, QuadraticScalar::rational(1, 2), true);
    }
    c.eps = positive_real(j, "eps", 1e-6);
    c.tol = positive_real(j, "tol", 1e-6);
    c.seed = o.seed ? *o.seed : j.value("seed", std::uint64_t{1});
    c.samples = count_field(j, "samples", c.samples);
    c.support_pairs = count_field(j, "support_pairs", c.support_pairs);
    c.max_n = count_field(j, "max_n", c.max_n);
    c.pairs = count_field(j, "pairs", c.pairs);
    c.triples = count_field(j, "triples", c.triples);
    c.bisections = count_field(j, "bisections", c.bisections);
    c.max_separations = count_field(j, "max_separations", c.max_separations);
    if (c.max_n == 0) throw ConfigError("max_n must be positive");

    if (j.contains("hull_radii")) {
      c.hull_radii = scalars(j.at("hull_radii"), "hull_radii");
    } else {
      c.hull_radii = {c.radius / QuadraticScalar(3), c.radius * QuadraticScalar::rational(2, 3), c.radius};
    }
    for (std::size_t i = 0; i < c.hull_radii.size(); ++i) {
      if (scalar_sign(c.hull_radii[i]) <= 0) throw ConfigError("hull_radii must be positive");
      if (i > 0 && c.hull_radii[i] < c.hull_radii[i - 1]) throw ConfigError("hull_radii must be increasing");
    }
    return c;
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

RunConfig load_config_file(const std::string& path, const Overrides& o) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return load_config(j, o);
}

json parameters_json(const RunConfig& c) {
  json hr = json::array();
  for (const auto& r : c.hull_radii) hr.push_back(to_json(r));
  return {{"radius", to_json(c.radius)},
          {"arrow_radius", to_json(c.arrow_radius)},
          {"sample", to_json(c.sample)},
          {"k", to_json(c.k)},
          {"u", to_json(c.u)},
          {"eps", c.eps},
          {"tol", c.tol},
          {"seed", c.seed},
          {"samples", c.samples},
          {"support_pairs", c.support_pairs},
          {"max_n", c.max_n},
          {"pairs", c.pairs},
          {"triples", c.triples},
          {"bisections", c.bisections},
          {"max_separations", c.max_separations},
          {"hull_radii", hr}};
}

}  // namespace flc::cli
