#pragma once

#include <complex>
#include <vector>

#include "tmra/poles.hpp"

namespace tmra {

/// Unimodular normalizer |1 + a^2| / (1 + a^2); 1 when a = i.
cplx chi_factor(const Pole& a);

/// Takenaka-Malmquist system on the real line for a fixed pole sequence.
///
///   Phi_k(z) = sqrt(beta_k) / (z - conj(a_k)) * b_{k-1}(z)
///   b_m(z)   = prod_{j<=m} chi_j (z - a_j) / (z - conj(a_j)),   b_0 = 1
///
/// Phi_k uses the partial product of the first k-1 factors; the closed form
/// of the reproducing kernel uses the full product b_m.
class BasisContext {
 public:
  explicit BasisContext(PoleSequence seq);
  /// Custom unimodular factors (one per pole); throws InvalidParameter
  /// if a factor is not unimodular within 1e-14.
  BasisContext(PoleSequence seq, std::vector<cplx> chi);

  const PoleSequence& poles() const noexcept { return seq_; }
  const std::vector<cplx>& chi() const noexcept { return chi_; }
  std::size_t size() const noexcept { return seq_.size(); }

  /// b_m(z), 0 <= m <= n. Throws PoleHit if z equals some conj(a_k), k <= m.
  cplx blaschke(std::size_t m, cplx z) const;
  /// Phi_k(z), 1 <= k <= n.
  cplx phi(std::size_t k, cplx z) const;
  /// Phi_1(z), ..., Phi_m(z) sharing the partial products.
  std::vector<cplx> phi_all(std::size_t m, cplx z) const;

 private:
  PoleSequence seq_;
  std::vector<cplx> chi_;
};

inline cplx blaschke_eval(const BasisContext& ctx, std::size_t m, cplx z) {
  return ctx.blaschke(m, z);
}
inline cplx phi_eval(const BasisContext& ctx, std::size_t k, cplx z) {
  return ctx.phi(k, z);
}

struct KernelSum {
  cplx direct;       ///< sum_{k<=m} conj(Phi_k(zeta)) Phi_k(z)
  cplx closed_form;  ///< (1 - conj(b_m(zeta)) b_m(z)) / (2i (conj(zeta) - z))
};

/// Partial reproducing kernel of the system, by direct summation and by the
/// Christoffel-Darboux type closed form. Throws CoincidentArguments when
/// z = conj(zeta).
KernelSum cd_kernel_sum(const BasisContext& ctx, std::size_t m, cplx z, cplx zeta);

}  // namespace tmra
