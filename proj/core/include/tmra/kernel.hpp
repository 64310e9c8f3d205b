#pragma once

#include <complex>

#include "tmra/poles.hpp"

namespace tmra {

/// Coefficients of K(z) = (A + Bz) / (z^2 + lambda^2)^2 and the weight
/// scale rho0 of rho_n = rho0 * nu_n.
struct KernelParams {
  cplx A = 1.0;
  cplx B = 0.0;
  double lambda = 1.0;
  cplx rho0 = 1.0;
};

/// lambda > 0 and rho0 != 0.
void validate_kernel_params(const KernelParams& p);
/// Additionally requires real A and B (ComplexCoefficients otherwise).
void validate_real_kernel_params(const KernelParams& p);

cplx kernel_eval(const KernelParams& p, cplx z);

/// K(z) = c1p/(i l - z) + c1m/(i l + z) + c2p/(i l - z)^2 + c2m/(i l + z)^2
struct PartialFractionCoeffs {
  cplx c1p, c1m, c2p, c2m;
};

PartialFractionCoeffs partial_fraction_coeffs(const KernelParams& p);
cplx reassemble(const PartialFractionCoeffs& c, double lambda, cplx z);

/// R_n(z) = K(z) / tau_n(z).
cplx weighted_kernel_eval(const KernelParams& p, const PoleSequence& seq, cplx z);

/// K(z) - T_{n-1}(z) written through the two double-pole contributions at
/// +i lambda and -i lambda. Accuracy degrades past |z| ~ 1e6 where the two
/// groups cancel.
cplx residual_eval(const KernelParams& p, const PoleSequence& seq, cplx z);

}  // namespace tmra
