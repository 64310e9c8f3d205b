#include "tmra/kernel.hpp"

#include <cmath>

#include "tmra/cpoly.hpp"
#include "tmra/errors.hpp"

namespace tmra {

namespace {

constexpr cplx I{0.0, 1.0};

void check_not_kernel_pole(double lambda, cplx z) {
  if (z == cplx(0.0, lambda) || z == cplx(0.0, -lambda)) {
    throw Error(ErrorCode::PoleHit, "argument is a kernel pole +-i*lambda");
  }
}

}  // namespace

void validate_kernel_params(const KernelParams& p) {
  validate_lambda(p.lambda);
  if (p.rho0 == cplx(0.0)) {
    throw Error(ErrorCode::InvalidParameter, "rho0 must be nonzero");
  }
  if (!std::isfinite(std::abs(p.A)) || !std::isfinite(std::abs(p.B))) {
    throw Error(ErrorCode::InvalidParameter, "A and B must be finite");
  }
}

void validate_real_kernel_params(const KernelParams& p) {
  validate_kernel_params(p);
  if (p.A.imag() != 0.0 || p.B.imag() != 0.0) {
    throw Error(ErrorCode::ComplexCoefficients, "A and B must be real");
  }
}

cplx kernel_eval(const KernelParams& p, cplx z) {
  validate_kernel_params(p);
  check_not_kernel_pole(p.lambda, z);
  const cplx q = z * z + p.lambda * p.lambda;
  return (p.A + p.B * z) / (q * q);
}

PartialFractionCoeffs partial_fraction_coeffs(const KernelParams& p) {
  validate_kernel_params(p);
  const double l = p.lambda;
  const cplx c1 = p.A * I / (4.0 * l * l * l);
  return {c1, c1, -(p.A + I * l * p.B) / (4.0 * l * l),
          -(p.A - I * l * p.B) / (4.0 * l * l)};
}

cplx reassemble(const PartialFractionCoeffs& c, double lambda, cplx z) {
  check_not_kernel_pole(lambda, z);
  const cplx up = I * lambda - z;
  const cplx dn = I * lambda + z;
  return c.c1p / up + c.c1m / dn + c.c2p / (up * up) + c.c2m / (dn * dn);
}

cplx weighted_kernel_eval(const KernelParams& p, const PoleSequence& seq, cplx z) {
  const cplx tau = tau_poly(seq)(z);
  if (tau == cplx(0.0)) {
    throw Error(ErrorCode::PoleHit, "argument is a root of tau_n");
  }
  return kernel_eval(p, z) / tau;
}

cplx residual_eval(const KernelParams& p, const PoleSequence& seq, cplx z) {
  validate_kernel_params(p);
  check_not_kernel_pole(p.lambda, z);
  const double l = p.lambda;
  const cplx il = I * l;
  const ComplexPolynomial tau = tau_poly(seq);
  const ComplexPolynomial nu = nu_poly(seq);
  const cplx sigma = sigma_sum(seq, l);
  const cplx ap = p.A + il * p.B;
  const cplx am = p.A - il * p.B;
  const cplx up = il - z;
  const cplx dn = il + z;

  const cplx upper = p.A * I / (l * up) - ap / (up * up) + ap * sigma / up;
  const cplx lower = p.A * I / (l * dn) - am / (dn * dn) - am * std::conj(sigma) / dn;
  const double pre = 1.0 / (4.0 * l * l);
  return pre * (tau(z) / tau(il)) * upper + pre * (nu(z) / nu(-il)) * lower;
}

}  // namespace tmra
