#pragma once

#include "cliffmm/efb.hpp"
#include "cliffmm/transform.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cliffmm {

// With Gamma = g_1 g_2 ... g_{2m}, every EFB element satisfies
// Gamma Psi = eps Psi; this returns eps.  Computed slotwise: the slot factor
// (q_i p_i - p_i q_i) fixes symbols starting with q and negates the others.
int weyl_sign(const EfbElement& psi);

// Per-slot choice of null vector spanning the maximal totally null plane
// annihilating an EFB element.
struct TnpBasis {
  int m = 1;
  std::uint32_t p_mask = 0;  // bit t set: v_{t+1} = p_{t+1}, clear: q_{t+1}

  WittKind kind(int slot) const {
    return (p_mask >> slot) & 1 ? WittKind::P : WittKind::Q;
  }
  auto operator<=>(const TnpBasis&) const = default;
};

// The first null vector of each slot: q for {qp, q}, p for {pq, p}.  Every
// vector of the returned plane annihilates psi from the left.
TnpBasis tnp_of(const EfbElement& psi);

// All 2^m EFB elements sharing psi's totally null plane: toggle each slot
// between the two symbols with the same leading null vector (q <-> qp,
// p <-> pq).
std::vector<EfbElement> tnp_class(const EfbElement& psi);

// Detects a nonzero scalar multiple of a single EFB element; the zero
// multivector does not qualify.
std::optional<EfbElement> is_simple_spinor_form(const EfbMultivector& a);

// p_i or q_i as an EFB multivector (witt_vector pushed through the change of
// basis); 2^{m-1} terms.
EfbMultivector null_vector(WittKind kind, int i, int m);

// Gamma as a gamma-basis multivector: the full-grade blade.
GammaMultivector gamma_volume(int m);

}  // namespace cliffmm
