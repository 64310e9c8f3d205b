#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmra/kernel.hpp"
#include "tmra/poles.hpp"
#include "tmra/quad_oracle.hpp"

namespace tmra::cli {

enum class PoleScheme { Explicit, EquispacedImaginary, GeometricImaginary };
enum class OutputFormat { Json, Csv };

/// a_k = i (start + step (k-1)) or a_k = i start ratio^(k-1).
struct SchemeParams {
  double start = 1.0;
  double step = 1.0;
  double ratio = 2.0;
};

struct RunConfig {
  std::vector<Pole> poles{{0.0, 1.0}};
  double A = 1.0;
  double B = 0.0;
  double lambda = 1.0;
  cplx rho0 = 1.0;
  int n_max = 1;
  PoleScheme pole_scheme = PoleScheme::Explicit;
  SchemeParams scheme;
  QuadratureSpec quadrature;
  OutputFormat output_format = OutputFormat::Json;
  std::uint64_t seed = 0;
};

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string kind, const std::string& what,
              std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(std::move(kind)), index_(index) {}
  const std::string& kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  std::string kind_;
  std::optional<std::size_t> index_;
};

/// Parses the JSON config schema. Unknown keys are rejected.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Checks pole, kernel and quadrature invariants; throws ConfigError.
void validate_config(const RunConfig& cfg);

/// Poles for an n-pole run: the n-prefix of the explicit list, or the first
/// n scheme poles.
PoleSequence poles_for(const RunConfig& cfg, int n);
/// Poles for approx/verify: all explicit poles, or n_max scheme poles.
PoleSequence primary_poles(const RunConfig& cfg);

KernelParams kernel_params(const RunConfig& cfg);

using ojson = nlohmann::ordered_json;

/// Effective config, echoed in reports.
ojson to_json(const RunConfig& cfg);

}  // namespace tmra::cli
