#include "tmra/quad_oracle.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "tmra/errors.hpp"

namespace tmra {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

struct GaussLegendreRule {
  std::vector<double> nodes;  // on (-1, 1)
  std::vector<double> weights;
};

GaussLegendreRule build_rule(int n) {
  // boost returns the nonnegative zeros in ascending order.
  const std::vector<double> zeros = boost::math::legendre_p_zeros<double>(n);
  GaussLegendreRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(n));
  rule.weights.reserve(static_cast<std::size_t>(n));
  auto weight = [n](double x) {
    const double d = boost::math::legendre_p_prime<double>(n, x);
    return 2.0 / ((1.0 - x * x) * d * d);
  };
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
    if (*it == 0.0) continue;
    rule.nodes.push_back(-*it);
    rule.weights.push_back(weight(*it));
  }
  for (double x : zeros) {
    rule.nodes.push_back(x);
    rule.weights.push_back(weight(x));
  }
  return rule;
}

/// Node tables are built once per size and shared read-only.
std::shared_ptr<const GaussLegendreRule> rule_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const GaussLegendreRule>(build_rule(n));
  return slot;
}

cplx apply_rule(const LineFunction& f, const GaussLegendreRule& rule, double c) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = 0.5 * kPi * rule.nodes[i];
    const double cs = std::cos(theta);
    const double t = c * std::tan(theta);
    sum += rule.weights[i] * (c / (cs * cs)) * f.eval(t);
  }
  return 0.5 * kPi * sum;
}

QuadratureSpec with_default_scale(QuadratureSpec spec, double scale) {
  if (!spec.scale) spec.scale = scale > 0.0 ? scale : 1.0;
  return spec;
}

}  // namespace

void validate_quadrature_spec(const QuadratureSpec& spec) {
  if (spec.initial_nodes < 8) {
    throw Error(ErrorCode::InvalidParameter, "initial_nodes must be >= 8");
  }
  if (spec.max_doublings < 1) {
    throw Error(ErrorCode::InvalidParameter, "max_doublings must be >= 1");
  }
  if (!(spec.rel_tol > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "rel_tol must be positive");
  }
  if (spec.scale && !(*spec.scale > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "scale must be positive");
  }
  if (!(spec.abs_floor >= 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "abs_floor must be nonnegative");
  }
}

QuadratureResult integrate_line_detailed(const LineFunction& f, const QuadratureSpec& spec) {
  validate_quadrature_spec(spec);
  if (!(f.decay >= 2.0)) {
    throw Error(ErrorCode::InsufficientDecay, "integrand must decay at least like |t|^-2");
  }
  const double c = spec.scale.value_or(1.0);
  QuadratureResult out;
  int n = spec.initial_nodes;
  cplx older = 0.0;
  cplx previous = apply_rule(f, *rule_for(n), c);
  for (int d = 0; d < spec.max_doublings; ++d) {
    n *= 2;
    const cplx current = apply_rule(f, *rule_for(n), c);
    const double gap = std::abs(current - previous);
    out.gaps.push_back(gap);
    if (gap <= std::max(spec.rel_tol * std::abs(current), spec.abs_floor)) {
      out.value = current;
      out.nodes = n;
      return out;
    }
    older = previous;
    previous = current;
  }
  throw NoConvergenceError(std::abs(previous), std::abs(older), std::move(out.gaps));
}

cplx integrate_line(const LineFunction& f, const QuadratureSpec& spec) {
  return integrate_line_detailed(f, spec).value;
}

cplx tm_inner_product(const LineFunction& f, const LineFunction& g,
                      const QuadratureSpec& spec) {
  LineFunction prod{[&f, &g](double t) { return f.eval(t) * std::conj(g.eval(t)); },
                    f.decay + g.decay};
  return integrate_line(prod, spec) / kPi;
}

LineFunction basis_function(const BasisContext& ctx, std::size_t k) {
  return {[&ctx, k](double t) { return ctx.phi(k, cplx(t)); }, 1.0};
}

std::vector<std::vector<cplx>> gram_matrix(const BasisContext& ctx, std::size_t m,
                                           const QuadratureSpec& spec) {
  if (m > ctx.size()) {
    throw Error(ErrorCode::InvalidParameter, "Gram order exceeds pole count");
  }
  const QuadratureSpec s = with_default_scale(spec, ctx.poles().max_modulus());
  std::vector<std::vector<cplx>> g(m, std::vector<cplx>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      g[j][k] = tm_inner_product(basis_function(ctx, j + 1), basis_function(ctx, k + 1), s);
    }
  }
  return g;
}

cplx fourier_coeff(const LineFunction& f, const BasisContext& ctx, std::size_t k,
                   const QuadratureSpec& spec) {
  if (k == 0 || k > ctx.size()) {
    throw Error(ErrorCode::InvalidParameter, "basis index out of range");
  }
  const QuadratureSpec s = with_default_scale(spec, ctx.poles().max_modulus());
  return tm_inner_product(f, basis_function(ctx, k), s);
}

double weighted_error_functional(const ComplexPolynomial& p, const KernelParams& params,
                                 const PoleSequence& seq, const QuadratureSpec& spec) {
  validate_kernel_params(params);
  if (p.degree() > static_cast<int>(seq.size()) - 1) {
    throw Error(ErrorCode::DegreeTooHigh,
                "weighted error diverges for polynomials of degree >= n");
  }
  const double l2 = params.lambda * params.lambda;
  const double rho2 = std::norm(params.rho0);
  LineFunction integrand{
      [&](double t) {
        const double q = t * t + l2;
        const cplx diff = (params.A + params.B * t) / (q * q) - p(cplx(t));
        double weight = rho2;
        for (const Pole& a : seq) weight *= std::norm(cplx(t) - a.value());
        return cplx(std::norm(diff) / weight);
      },
      2.0};
  const QuadratureSpec s =
      with_default_scale(spec, std::max(params.lambda, seq.max_modulus()));
  return integrate_line(integrand, s).real();
}

CauchyPowerFunction::CauchyPowerFunction(cplx w, int power) : w_(w), power_(power) {
  if (!(w.imag() > 0.0)) {
    throw Error(ErrorCode::ArgumentNotInUpperHalfPlane,
                "test function parameter w must lie in the upper half-plane");
  }
  if (power != 1 && power != 2) {
    throw Error(ErrorCode::InvalidParameter, "test function power must be 1 or 2");
  }
}

cplx CauchyPowerFunction::operator()(cplx z) const {
  const cplx v = 1.0 / (z - std::conj(w_));
  return power_ == 1 ? v : v * v;
}

HardyCheck hardy_remainder_check(const CauchyPowerFunction& f, const BasisContext& ctx,
                                 std::size_t m, cplx z, const QuadratureSpec& spec) {
  if (!(z.imag() > 0.0)) {
    throw Error(ErrorCode::ArgumentNotInUpperHalfPlane, "z must lie in the upper half-plane");
  }
  if (m == 0 || m > ctx.size()) {
    throw Error(ErrorCode::InvalidParameter, "partial sum order out of range");
  }
  const double scale =
      std::max({ctx.poles().max_modulus(), std::abs(z), std::abs(f.w())});
  const QuadratureSpec s = with_default_scale(spec, scale);

  const LineFunction on_line{[&f](double t) { return f(cplx(t)); },
                             static_cast<double>(f.power())};
  cplx partial = 0.0;
  const auto phi_z = ctx.phi_all(m, z);
  for (std::size_t k = 1; k <= m; ++k) {
    partial += fourier_coeff(on_line, ctx, k, s) * phi_z[k - 1];
  }
  const LineFunction remainder_integrand{
      [&](double t) {
        return f(cplx(t)) * std::conj(ctx.blaschke(m, cplx(t))) / (cplx(t) - z);
      },
      static_cast<double>(f.power()) + 1.0};
  const cplx remainder =
      ctx.blaschke(m, z) / (2.0 * kPi * I) * integrate_line(remainder_integrand, s);
  return {f(z), partial + remainder};
}

}  // namespace tmra
