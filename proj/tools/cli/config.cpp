#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "tmra/errors.hpp"

namespace tmra::cli {

using nlohmann::json;

namespace {

double number(const json& j, const char* key) {
  if (!j.is_number()) throw ConfigError("InvalidConfig", std::string(key) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* key) {
  if (!j.is_number_integer()) {
    throw ConfigError("InvalidConfig", std::string(key) + " must be an integer");
  }
  return j.get<int>();
}

/// [re, im] pair.
std::pair<double, double> pair_of(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError("InvalidConfig", what + " must be a two-element numeric array");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("InvalidConfig", "unknown key '" + key + "' in " + where);
    }
  }
}

PoleScheme scheme_from(const std::string& s) {
  if (s == "explicit") return PoleScheme::Explicit;
  if (s == "equispaced_imaginary") return PoleScheme::EquispacedImaginary;
  if (s == "geometric_imaginary") return PoleScheme::GeometricImaginary;
  throw ConfigError("InvalidConfig", "unknown pole_scheme '" + s + "'");
}

const char* scheme_name(PoleScheme s) {
  switch (s) {
    case PoleScheme::Explicit: return "explicit";
    case PoleScheme::EquispacedImaginary: return "equispaced_imaginary";
    case PoleScheme::GeometricImaginary: return "geometric_imaginary";
  }
  return "explicit";
}

}  // namespace

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("InvalidConfig", "config must be a JSON object");
  reject_unknown(j,
                 {"poles", "A", "B", "lambda", "rho0", "n_max", "pole_scheme", "quadrature",
                  "output_format", "seed"},
                 "config");
  RunConfig cfg;
  if (j.contains("poles")) {
    const json& p = j["poles"];
    if (!p.is_array()) throw ConfigError("InvalidConfig", "poles must be an array");
    cfg.poles.clear();
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto [re, im] = pair_of(p[k], "pole " + std::to_string(k));
      cfg.poles.push_back({re, im});
    }
  }
  if (j.contains("A")) cfg.A = number(j["A"], "A");
  if (j.contains("B")) cfg.B = number(j["B"], "B");
  if (j.contains("lambda")) cfg.lambda = number(j["lambda"], "lambda");
  if (j.contains("rho0")) {
    const auto [re, im] = pair_of(j["rho0"], "rho0");
    cfg.rho0 = {re, im};
  }
  if (j.contains("n_max")) cfg.n_max = integer(j["n_max"], "n_max");
  if (j.contains("pole_scheme")) {
    const json& s = j["pole_scheme"];
    if (s.is_string()) {
      cfg.pole_scheme = scheme_from(s.get<std::string>());
    } else if (s.is_object()) {
      reject_unknown(s, {"kind", "start", "step", "ratio"}, "pole_scheme");
      if (!s.contains("kind") || !s["kind"].is_string()) {
        throw ConfigError("InvalidConfig", "pole_scheme.kind must be a string");
      }
      cfg.pole_scheme = scheme_from(s["kind"].get<std::string>());
      if (s.contains("start")) cfg.scheme.start = number(s["start"], "pole_scheme.start");
      if (s.contains("step")) cfg.scheme.step = number(s["step"], "pole_scheme.step");
      if (s.contains("ratio")) cfg.scheme.ratio = number(s["ratio"], "pole_scheme.ratio");
    } else {
      throw ConfigError("InvalidConfig", "pole_scheme must be a string or an object");
    }
  }
  if (j.contains("quadrature")) {
    const json& q = j["quadrature"];
    if (!q.is_object()) throw ConfigError("InvalidConfig", "quadrature must be an object");
    reject_unknown(q, {"initial_nodes", "max_doublings", "rel_tol", "scale", "abs_floor"},
                   "quadrature");
    if (q.contains("initial_nodes")) {
      cfg.quadrature.initial_nodes = integer(q["initial_nodes"], "quadrature.initial_nodes");
    }
    if (q.contains("max_doublings")) {
      cfg.quadrature.max_doublings = integer(q["max_doublings"], "quadrature.max_doublings");
    }
    if (q.contains("rel_tol")) cfg.quadrature.rel_tol = number(q["rel_tol"], "quadrature.rel_tol");
    if (q.contains("scale")) cfg.quadrature.scale = number(q["scale"], "quadrature.scale");
    if (q.contains("abs_floor")) {
      cfg.quadrature.abs_floor = number(q["abs_floor"], "quadrature.abs_floor");
    }
  }
  if (j.contains("output_format")) {
    const json& f = j["output_format"];
    if (f == "json") {
      cfg.output_format = OutputFormat::Json;
    } else if (f == "csv") {
      cfg.output_format = OutputFormat::Csv;
    } else {
      throw ConfigError("InvalidConfig", "output_format must be \"json\" or \"csv\"");
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) {
      throw ConfigError("InvalidConfig", "seed must be a nonnegative integer");
    }
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("InvalidConfig", "cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("InvalidConfig", std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

void validate_config(const RunConfig& cfg) {
  if (cfg.pole_scheme == PoleScheme::Explicit) {
    try {
      validate_poles(cfg.poles);
    } catch (const Error& e) {
      throw ConfigError(std::string(to_string(e.code())), e.what(), e.index());
    }
  } else {
    if (!(cfg.scheme.start > 0.0)) {
      throw ConfigError("PoleNotInUpperHalfPlane", "pole_scheme.start must be positive", 0);
    }
    if (cfg.pole_scheme == PoleScheme::EquispacedImaginary && !(cfg.scheme.step >= 0.0)) {
      throw ConfigError("InvalidConfig", "pole_scheme.step must be nonnegative");
    }
    if (cfg.pole_scheme == PoleScheme::GeometricImaginary && !(cfg.scheme.ratio > 0.0)) {
      throw ConfigError("InvalidConfig", "pole_scheme.ratio must be positive");
    }
  }
  if (cfg.n_max < 1) throw ConfigError("InvalidConfig", "n_max must be >= 1");
  try {
    validate_kernel_params(kernel_params(cfg));
    validate_quadrature_spec(cfg.quadrature);
  } catch (const Error& e) {
    throw ConfigError(std::string(to_string(e.code())), e.what());
  }
  if (!std::isfinite(cfg.A) || !std::isfinite(cfg.B)) {
    throw ConfigError("InvalidConfig", "A and B must be finite");
  }
}

PoleSequence poles_for(const RunConfig& cfg, int n) {
  if (n < 1) throw ConfigError("InvalidConfig", "pole count must be >= 1");
  std::vector<Pole> v;
  const auto count = static_cast<std::size_t>(n);
  switch (cfg.pole_scheme) {
    case PoleScheme::Explicit:
      if (cfg.poles.size() < count) {
        throw ConfigError("InvalidConfig", "explicit poles list has fewer than " +
                                               std::to_string(n) + " entries");
      }
      v.assign(cfg.poles.begin(), cfg.poles.begin() + n);
      break;
    case PoleScheme::EquispacedImaginary:
      for (int k = 0; k < n; ++k) v.push_back({0.0, cfg.scheme.start + cfg.scheme.step * k});
      break;
    case PoleScheme::GeometricImaginary:
      for (int k = 0; k < n; ++k) {
        v.push_back({0.0, cfg.scheme.start * std::pow(cfg.scheme.ratio, k)});
      }
      break;
  }
  try {
    return PoleSequence(std::move(v));
  } catch (const Error& e) {
    throw ConfigError(std::string(to_string(e.code())), e.what(), e.index());
  }
}

PoleSequence primary_poles(const RunConfig& cfg) {
  const int n = cfg.pole_scheme == PoleScheme::Explicit ? static_cast<int>(cfg.poles.size())
                                                        : cfg.n_max;
  return poles_for(cfg, n);
}

KernelParams kernel_params(const RunConfig& cfg) {
  return {cfg.A, cfg.B, cfg.lambda, cfg.rho0};
}

ojson to_json(const RunConfig& cfg) {
  ojson poles = ojson::array();
  for (const Pole& p : cfg.poles) poles.push_back({p.alpha, p.beta});
  ojson quad{{"initial_nodes", cfg.quadrature.initial_nodes},
            {"max_doublings", cfg.quadrature.max_doublings},
            {"rel_tol", cfg.quadrature.rel_tol},
            {"abs_floor", cfg.quadrature.abs_floor}};
  if (cfg.quadrature.scale) quad["scale"] = *cfg.quadrature.scale;
  ojson j{{"poles", poles},
         {"A", cfg.A},
         {"B", cfg.B},
         {"lambda", cfg.lambda},
         {"rho0", {cfg.rho0.real(), cfg.rho0.imag()}},
         {"n_max", cfg.n_max},
         {"pole_scheme", {{"kind", scheme_name(cfg.pole_scheme)}}},
         {"quadrature", quad},
         {"output_format", cfg.output_format == OutputFormat::Json ? "json" : "csv"},
         {"seed", cfg.seed}};
  if (cfg.pole_scheme == PoleScheme::Explicit) {
    j["pole_scheme"] = "explicit";
  } else {
    j.erase("poles");
    j["pole_scheme"]["start"] = cfg.scheme.start;
    if (cfg.pole_scheme == PoleScheme::EquispacedImaginary) {
      j["pole_scheme"]["step"] = cfg.scheme.step;
    } else {
      j["pole_scheme"]["ratio"] = cfg.scheme.ratio;
    }
  }
  return j;
}

}  // namespace tmra::cli
