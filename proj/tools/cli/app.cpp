#include "app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "commands.hpp"
#include "config.hpp"
#include "format.hpp"
#include "tmra/errors.hpp"

namespace tmra::cli {

namespace {

void error_record(std::ostream& err, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> index = std::nullopt, ojson extra = ojson::object()) {
  ojson e{{"kind", kind}, {"message", message}};
  if (index) e["pole_index"] = *index;
  for (const auto& [k, v] : extra.items()) e[k] = v;
  err << ojson{{"error", e}}.dump() << '\n';
}

struct Options {
  std::string config;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool printed_forms = false;
};

RunConfig effective_config(const Options& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (o.format == "json") cfg.output_format = OutputFormat::Json;
  if (o.format == "csv") cfg.output_format = OutputFormat::Csv;
  if (o.seed) cfg.seed = *o.seed;
  if (o.tol) cfg.quadrature.rel_tol = *o.tol;
  validate_config(cfg);
  return cfg;
}

int emit(const std::string& text, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f || !(f << text)) {
    error_record(err, "OutputError", "cannot write '" + o.out + "'");
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Takenaka-Malmquist rational approximation of (A + B x) / (x^2 + lambda^2)^2"};
  app.name("tmra");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config, "JSON run configuration");
  app.add_option("--out", o.out, "write the report here instead of standard output");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", o.seed, "seed for randomized check points");
  app.add_option("--tol", o.tol, "quadrature relative tolerance")->check(CLI::PositiveNumber);
  auto* approx = app.add_subcommand("approx", "best polynomial, minimal error and oracle check");
  auto* verify = app.add_subcommand("verify", "run every identity check");
  verify->add_flag("--paper-printed-forms", o.printed_forms,
                   "use the uncorrected formulas (negative control)");
  auto* sweep = app.add_subcommand("sweep", "minimal error for n = 1..n_max");

  std::vector<std::string> argv_store{"tmra"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_record(err, "UsageError", e.what());
    return kExitConfig;
  }

  try {
    const RunConfig cfg = effective_config(o);
    const bool csv = cfg.output_format == OutputFormat::Csv;
    if (approx->parsed()) {
      const ApproxOutput a = run_approx(cfg);
      return emit(csv ? approx_csv(a) : dump_json(approx_json(cfg, a)), o, out, err);
    }
    if (verify->parsed()) {
      const VerifyOutput v = run_verify(cfg, o.printed_forms);
      const int rc = emit(csv ? verify_csv(v) : dump_json(verify_json(cfg, v)), o, out, err);
      if (rc != kExitOk) return rc;
      if (v.no_convergence) return kExitNoConvergence;
      return v.all_pass() ? kExitOk : kExitCheckFailed;
    }
    if (sweep->parsed()) {
      const auto rows = run_sweep(cfg);
      return emit(csv ? sweep_csv(rows) : dump_json(sweep_json(cfg, rows)), o, out, err);
    }
  } catch (const ConfigError& e) {
    error_record(err, e.kind(), e.what(), e.index());
    return kExitConfig;
  } catch (const NoConvergenceError& e) {
    error_record(err, "NoConvergence", e.what(), std::nullopt,
                 {{"last", e.last()}, {"previous", e.previous()}, {"gap", e.gap()}});
    return kExitNoConvergence;
  } catch (const Error& e) {
    error_record(err, std::string(to_string(e.code())), e.what(), e.index());
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace tmra::cli
