#include "tmra/tm_basis.hpp"

#include <cmath>
#include <string>

#include "tmra/errors.hpp"

namespace tmra {

cplx chi_factor(const Pole& a) {
  const cplx s = 1.0 + a.value() * a.value();
  if (s == cplx(0.0)) return 1.0;
  return std::abs(s) / s;
}

BasisContext::BasisContext(PoleSequence seq) : seq_(std::move(seq)) {
  chi_.reserve(seq_.size());
  for (const Pole& p : seq_) chi_.push_back(chi_factor(p));
}

BasisContext::BasisContext(PoleSequence seq, std::vector<cplx> chi)
    : seq_(std::move(seq)), chi_(std::move(chi)) {
  if (chi_.size() != seq_.size()) {
    throw Error(ErrorCode::InvalidParameter, "one unimodular factor per pole required");
  }
  for (std::size_t k = 0; k < chi_.size(); ++k) {
    if (std::abs(std::abs(chi_[k]) - 1.0) > 1e-14) {
      throw Error(ErrorCode::InvalidParameter,
                  "factor " + std::to_string(k) + " is not unimodular", k);
    }
  }
}

namespace {

void check_pole_hit(const Pole& p, cplx z, std::size_t k) {
  if (z == p.conj()) {
    throw Error(ErrorCode::PoleHit,
                "argument coincides with conjugate of pole " + std::to_string(k), k);
  }
}

}  // namespace

cplx BasisContext::blaschke(std::size_t m, cplx z) const {
  if (m > seq_.size()) {
    throw Error(ErrorCode::InvalidParameter, "Blaschke order exceeds pole count");
  }
  cplx b = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const Pole& p = seq_[k];
    check_pole_hit(p, z, k);
    b *= chi_[k] * (z - p.value()) / (z - p.conj());
  }
  return b;
}

cplx BasisContext::phi(std::size_t k, cplx z) const {
  if (k == 0 || k > seq_.size()) {
    throw Error(ErrorCode::InvalidParameter, "basis index out of range");
  }
  const Pole& p = seq_[k - 1];
  check_pole_hit(p, z, k - 1);
  return std::sqrt(p.beta) / (z - p.conj()) * blaschke(k - 1, z);
}

std::vector<cplx> BasisContext::phi_all(std::size_t m, cplx z) const {
  if (m > seq_.size()) {
    throw Error(ErrorCode::InvalidParameter, "basis index out of range");
  }
  std::vector<cplx> out;
  out.reserve(m);
  cplx b = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    const Pole& p = seq_[k];
    check_pole_hit(p, z, k);
    const cplx denom = z - p.conj();
    out.push_back(std::sqrt(p.beta) / denom * b);
    b *= chi_[k] * (z - p.value()) / denom;
  }
  return out;
}

KernelSum cd_kernel_sum(const BasisContext& ctx, std::size_t m, cplx z, cplx zeta) {
  if (m == 0 || m > ctx.size()) {
    throw Error(ErrorCode::InvalidParameter, "kernel order out of range");
  }
  const cplx zeta_bar = std::conj(zeta);
  if (z == zeta_bar) {
    throw Error(ErrorCode::CoincidentArguments, "z equals conj(zeta)");
  }
  const auto phi_z = ctx.phi_all(m, z);
  const auto phi_zeta = ctx.phi_all(m, zeta);
  KernelSum out{0.0, 0.0};
  for (std::size_t k = 0; k < m; ++k) out.direct += std::conj(phi_zeta[k]) * phi_z[k];
  const cplx bz = ctx.blaschke(m, z);
  const cplx bzeta = ctx.blaschke(m, zeta);
  out.closed_form = (1.0 - std::conj(bzeta) * bz) / (cplx(0.0, 2.0) * (zeta_bar - z));
  return out;
}

}  // namespace tmra
