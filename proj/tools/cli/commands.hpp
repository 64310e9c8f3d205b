#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "format.hpp"
#include "tmra/best_approx.hpp"

namespace tmra::cli {

struct ApproxOutput {
  PoleSequence poles;
  ApproxReport report;
  double oracle_error = 0.0;  ///< F_n(T) by quadrature
  double relative_gap = 0.0;  ///< |min_error - oracle_error| / oracle_error
};

ApproxOutput run_approx(const RunConfig& cfg);
ojson approx_json(const RunConfig& cfg, const ApproxOutput& a);
std::string approx_csv(const ApproxOutput& a);

struct CheckRecord {
  std::string identity_name;
  double max_relative_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int samples = 0;
  std::optional<std::string> error;  ///< set when the check could not finish
};

struct VerifyOutput {
  std::vector<CheckRecord> checks;
  ojson errata = ojson::array();
  ojson convention;
  bool printed_forms = false;
  bool no_convergence = false;
  bool all_pass() const;
};

/// Every identity check on the config's pole set. With printed_forms the
/// residual and closed-form checks use the uncorrected formulas.
VerifyOutput run_verify(const RunConfig& cfg, bool printed_forms);
ojson verify_json(const RunConfig& cfg, const VerifyOutput& v);
std::string verify_csv(const VerifyOutput& v);

struct SweepRow {
  int n = 0;
  double mu = 0.0;
  double a_sum = 0.0;
  double b_sum = 0.0;
  double min_error_closed_form = 0.0;
  double oracle_error = 0.0;
  double relative_gap = 0.0;
};

/// Rows n = 1..n_max; computed concurrently, returned in order of n.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);
ojson sweep_json(const RunConfig& cfg, const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

inline constexpr const char* kSweepHeader =
    "n,mu,a_sum,b_sum,min_error_closed_form,oracle_error,relative_gap";

}  // namespace tmra::cli
